#include <doctest.h>

#include "properties.hpp"

namespace {

void run_suite(const props::Tally& t) {
  INFO(t.suite);
  CHECK(t.checks > 0);
  for (const auto& f : t.failures) FAIL_CHECK(f);
}

}  // namespace

TEST_CASE("derived rules") { run_suite(props::derived_rules()); }
TEST_CASE("join laws") { run_suite(props::join_laws()); }
TEST_CASE("partial isomorphisms") { run_suite(props::partial_isomorphism_rules()); }
TEST_CASE("binary meets") { run_suite(props::binary_meets()); }
TEST_CASE("slice identities") { run_suite(props::slice_identities()); }
TEST_CASE("groupoid criterion") { run_suite(props::groupoid_criterion()); }
TEST_CASE("pushforward of slices") { run_suite(props::pushforward_slices()); }
TEST_CASE("germ soundness") { run_suite(props::germ_soundness()); }
TEST_CASE("theta homomorphism") { run_suite(props::theta_homomorphism()); }
TEST_CASE("range image") { run_suite(props::range_image()); }
TEST_CASE("bislice criterion") { run_suite(props::bislice_criterion()); }
TEST_CASE("eta injective") { run_suite(props::eta_injective()); }
