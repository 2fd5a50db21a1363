#pragma once

// Verification reports. Failure is data: every checker returns a CheckReport
// whose clauses carry witness index tuples.

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hopfalg {

enum class Status { Pass, Fail, Skipped };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

using Witness = std::vector<std::int64_t>;

struct Clause {
  static constexpr std::size_t kMaxStoredWitnesses = 16;

  std::string id;
  Status status = Status::Pass;
  std::vector<Witness> witnesses;  // first kMaxStoredWitnesses only
  std::size_t witness_count = 0;
  std::string note;
  double seconds = 0.0;

  void fail(Witness w) {
    status = Status::Fail;
    ++witness_count;
    if (witnesses.size() < kMaxStoredWitnesses) witnesses.push_back(std::move(w));
  }

  /// Records a failure with no index data attached.
  void fail_without_witness(std::string why) {
    status = Status::Fail;
    if (!note.empty()) note += "; ";
    note += std::move(why);
  }

  void expect(bool ok, Witness w) {
    if (!ok) fail(std::move(w));
  }

  bool ok() const { return status != Status::Fail; }
};

struct CheckReport {
  std::string claim;
  std::string header;  // conventions in force, limitations
  std::vector<Clause> clauses;

  bool passed() const {
    for (const auto& c : clauses)
      if (c.status == Status::Fail) return false;
    return true;
  }

  bool all_pass() const {
    for (const auto& c : clauses)
      if (c.status != Status::Pass) return false;
    return true;
  }

  const Clause* find(const std::string& id) const {
    for (const auto& c : clauses)
      if (c.id == id) return &c;
    return nullptr;
  }

  Status status_of(const std::string& id) const {
    const Clause* c = find(id);
    return c ? c->status : Status::Skipped;
  }

  /// Runs body against a fresh clause and records its wall time.
  Clause& run(const std::string& id, const std::function<void(Clause&)>& body) {
    Clause c;
    c.id = id;
    auto t0 = std::chrono::steady_clock::now();
    body(c);
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    clauses.push_back(std::move(c));
    return clauses.back();
  }

  Clause& skip(const std::string& id, std::string why) {
    Clause c;
    c.id = id;
    c.status = Status::Skipped;
    c.note = std::move(why);
    clauses.push_back(std::move(c));
    return clauses.back();
  }

  Clause& add(Clause c) {
    clauses.push_back(std::move(c));
    return clauses.back();
  }

  /// Appends other's clauses with ids prefixed "prefix.".
  void absorb(const CheckReport& other, const std::string& prefix) {
    for (Clause c : other.clauses) {
      if (!prefix.empty()) c.id = prefix + "." + c.id;
      clauses.push_back(std::move(c));
    }
    if (!other.header.empty()) {
      if (!header.empty()) header += "\n";
      header += (prefix.empty() ? "" : prefix + ": ") + other.header;
    }
  }

  /// Collapses the report into a single clause (pass iff nothing failed;
  /// skipped sub-clauses are named in the note).
  Clause summarize(const std::string& id) const {
    Clause c;
    c.id = id;
    for (const auto& sub : clauses) {
      c.seconds += sub.seconds;
      if (sub.status == Status::Skipped) {
        if (!c.note.empty()) c.note += "; ";
        c.note += sub.id + " skipped";
      }
      if (sub.status != Status::Fail) continue;
      c.status = Status::Fail;
      c.witness_count += sub.witness_count;
      for (const auto& w : sub.witnesses)
        if (c.witnesses.size() < Clause::kMaxStoredWitnesses) c.witnesses.push_back(w);
      if (!c.note.empty()) c.note += "; ";
      c.note += sub.id + " failed";
    }
    return c;
  }
};

}  // namespace hopfalg
