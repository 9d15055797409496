#include "algebroid/random.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

Multisection vec(std::vector<Scalar> c) { return as_multisection(Section(std::move(c))); }

}  // namespace

TEST_CASE("wedge") {
  const Multisection dx = vec({1, 0}), dy = vec({0, 1});
  CHECK(wedge(dx, dx).is_zero());
  CHECK(wedge(dx, dy).coefficient(bit(0) | bit(1)) == Scalar(1));
  CHECK(wedge(dy, dx).coefficient(bit(0) | bit(1)) == Scalar(-1));
  const Cosection a = Cosection::linear({X(), 0}), b = Cosection::linear({0, Y()});
  CHECK(wedge(a, b).coefficient(bit(0) | bit(1)) == X() * Y());
}

TEST_CASE("interior product") {
  const Multisection dxy = Multisection::basis(3, bit(0) | bit(1));
  const Cosection dx = Cosection::linear({1, 0, 0}), dy = Cosection::linear({0, 1, 0}),
                  dz = Cosection::linear({0, 0, 1});
  CHECK(as_section(interior(dx, dxy)) == Section::frame(3, 1));
  CHECK(as_section(interior(dy, dxy)) == -Section::frame(3, 0));
  CHECK(interior(dz, dxy).is_zero());
  CHECK_THROWS(interior(dx, Multisection::function(3, 1)));
}

TEST_CASE("pairing and evaluation agree") {
  RandomSource rng(3);
  const Chart c = fixtures::chart(2);
  for (int n = 0; n < 10; ++n) {
    const Cosection w = rng.form(c, 3, 2);
    const Section u = rng.section(c, 3), v = rng.section(c, 3);
    const std::vector<Section> args{u, v}, swapped{v, u};
    CHECK(evaluate(w, args) == -evaluate(w, swapped));
    CHECK(evaluate(w, args) == pairing(interior(u, w), v));
  }
}

TEST_CASE("masks") {
  CHECK(masks_of_degree(3, 2).size() == 3);
  CHECK(mask_indices(bit(0) | bit(2)) == std::vector<int>{0, 2});
  CHECK(wedge_sign(bit(1), bit(0)) == -1);
  CHECK(wedge_sign(bit(0), bit(1) | bit(2)) == 1);
  CHECK(wedge_sign(bit(2), bit(0) | bit(1)) == 1);
}
