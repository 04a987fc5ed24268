#include <gtest/gtest.h>

#include "doldkit/properties.hpp"

using namespace doldkit;

class NamedProperty : public ::testing::TestWithParam<std::string> {};

TEST_P(NamedProperty, HoldsOnRandomInputs) {
  const PropertyResult r = run_property(GetParam(), 20261017, 100);
  EXPECT_EQ(r.trials, 100u);
  EXPECT_EQ(r.failures, 0u) << r.first_failure.value_or("");
}

INSTANTIATE_TEST_SUITE_P(All, NamedProperty, ::testing::ValuesIn(property_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s)
                             if (c == '-') c = '_';
                           return s;
                         });

TEST(Properties, UnknownNameIsRejected) {
  EXPECT_THROW(run_property("no-such-property", 1, 1), std::invalid_argument);
}
