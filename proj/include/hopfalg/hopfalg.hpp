#pragma once

#include "hopfalg/scalar.hpp"
#include "hopfalg/linalg.hpp"
#include "hopfalg/report.hpp"
#include "hopfalg/algebra.hpp"
#include "hopfalg/actions.hpp"
#include "hopfalg/products.hpp"
#include "hopfalg/bialgebroid.hpp"
#include "hopfalg/universal.hpp"
#include "hopfalg/catalog.hpp"
#include "hopfalg/io.hpp"
