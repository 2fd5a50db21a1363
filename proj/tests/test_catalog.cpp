#include "generators.hpp"

#include <gtest/gtest.h>

using namespace hopfalg;

TEST(Groups, TablesAreValidated) {
  EXPECT_EQ(catalog::validate_group(catalog::cyclic_table(3), {0, 2, 1}), 0u);
  EXPECT_EQ(catalog::validate_group(catalog::s3_table(), catalog::inverses_of(catalog::s3_table())), 0u);
  CayleyTable not_assoc = {{0, 1, 2}, {1, 0, 0}, {2, 0, 1}};
  EXPECT_THROW(group_algebra(not_assoc), NotAGroup);
  CayleyTable no_identity = {{0, 0}, {0, 0}};
  EXPECT_THROW(catalog::validate_group(no_identity, {0, 1}), NotAGroup);
  EXPECT_THROW(catalog::validate_group(catalog::cyclic_table(2), {0, 0}), NotAGroup);
  EXPECT_THROW(catalog::validate_group({{0, 1}, {1}}, {0, 1}), NotAGroup);
}

TEST(Groups, SignIsAHomomorphism) {
  CayleyTable s3 = catalog::s3_table(), c2 = catalog::cyclic_table(2);
  std::vector<std::size_t> sign = catalog::s3_sign();
  std::size_t odd = 0;
  for (std::size_t a = 0; a < 6; ++a) {
    odd += sign[a];
    for (std::size_t b = 0; b < 6; ++b) EXPECT_EQ(sign[s3[a][b]], c2[sign[a]][sign[b]]);
  }
  EXPECT_EQ(odd, 3u);
}

TEST(Catalog, DualOfGroupAlgebraIsFunctionAlgebra) {
  for (std::size_t n : {2u, 3u}) {
    HopfAlgebra d = dual_hopf(group_algebra(catalog::cyclic_table(n)));
    StructureAlgebra fun = function_algebra_with_translation(catalog::cyclic_table(n)).alg;
    EXPECT_EQ(d.algebra.mult, fun.mult) << n;
    EXPECT_EQ(d.algebra.unit, fun.unit) << n;
    EXPECT_TRUE(check_hopf(d).all_pass());
  }
}

TEST(Catalog, InstanceShapes) {
  std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> want = {
      {"k", {1, 1}}, {"c2", {2, 2}}, {"s3", {6, 6}}, {"s3-sign", {2, 6}}, {"h4", {2, 4}}};
  auto all = all_instances();
  ASSERT_EQ(all.size(), want.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(all[i].name, want[i].first);
    EXPECT_EQ(all[i].module.alg.dim, want[i].second.first) << all[i].name;
    EXPECT_EQ(all[i].module.hopf.dim(), want[i].second.second) << all[i].name;
  }
  EXPECT_THROW(instance_by_name("nope"), std::invalid_argument);
}

TEST(Catalog, AllInstancesPassOverBothFields) {
  for (const auto& f : gen::fields())
    for (const auto& inst : all_instances(f)) {
      const auto& m = inst.module;
      EXPECT_TRUE(check_hopf(m.hopf).all_pass()) << inst.name << " " << f.name();
      EXPECT_TRUE(check_algebra(m.alg).all_pass()) << inst.name << " " << f.name();
      EXPECT_TRUE(check_left_module_algebra(m).all_pass()) << inst.name << " " << f.name();
      EXPECT_EQ(m.alg.field, f);
    }
}

TEST(Catalog, Involutivity) {
  EXPECT_TRUE(is_involutive(instance_by_name("c2").hopf));
  EXPECT_TRUE(is_involutive(instance_by_name("s3").hopf));
  EXPECT_FALSE(is_involutive(instance_by_name("h4").hopf));
  EXPECT_FALSE(is_involutive(instance_by_name("h4", FieldSpec::prime(7)).hopf));
}

TEST(Catalog, ExportRoundTrip) {
  for (const auto& f : gen::fields())
    for (const auto& inst : all_instances(f)) {
      Json j = to_json(inst.module);
      Definition d = parse_definition(Json::parse(j.dump()));
      ASSERT_EQ(d.index(), 2u) << inst.name;
      const auto& back = std::get<LeftModuleAlgebra>(d);
      EXPECT_EQ(back.alg, inst.module.alg) << inst.name;
      EXPECT_EQ(back.hopf, inst.module.hopf) << inst.name;
      EXPECT_EQ(back.act, inst.module.act) << inst.name;
      EXPECT_EQ(to_json(back).dump(), j.dump()) << inst.name;
    }
}
