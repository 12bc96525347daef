#include "doctest.h"

#include "sift_oracle.hpp"

using namespace cgt;

TEST_CASE("modular pipeline fusion equals the tensor-sift oracle") {
  for (const char* spec : {"symmetric:3", "dicyclic:2", "dihedral:4", "alternating:4"}) {
    INFO(spec);
    auto result = testoracle::cross_check_fusion(spec);
    INFO(result.detail);
    CHECK(result.ok);
  }
}

TEST_CASE("the sift oracle also agrees on a few groups beyond the required four") {
  for (const char* spec : {"cyclic:6", "klein4", "dihedral:6", "symmetric:4"}) {
    INFO(spec);
    auto result = testoracle::cross_check_fusion(spec);
    INFO(result.detail);
    CHECK(result.ok);
  }
}
