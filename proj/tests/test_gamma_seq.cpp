#include <vector>

#include "arcmatch/arc_string.hpp"
#include "arcmatch/gamma_seq.hpp"
#include "arcmatch/oracle.hpp"
#include "doctest.h"

using namespace arcmatch;

namespace {

std::vector<int32_t> vals(const GammaSeq& g) {
  return {g.values().begin(), g.values().end()};
}

}  // namespace

TEST_CASE("single-base windows") {
  const auto p = validate("GAU", {{1, 3}});
  const auto q = validate("GCAU", {{1, 4}});
  const PatternContext ctx(p);

  // 'U' matches position 3 of P; positions 1 ('G') and 2 ('A') miss or,
  // for position 1, open an arc that cannot close in one base.
  const auto at_u = init_single(ctx, q, 4);
  CHECK(vals(at_u) == std::vector<int32_t>{0, 1, 3});
  CHECK(at_u.i1() == 4);
  CHECK(at_u.i2() == 4);
  CHECK(at_u.value(4) == 3);  // sentinel

  CHECK(vals(init_single(ctx, q, 3)) == std::vector<int32_t>{0, 2, 2});
  CHECK(vals(init_single(ctx, q, 2)) == std::vector<int32_t>{0, 1, 2});

  // A sentinel base matches nothing.
  const auto wq = wrap(validate("GCAU", {}));
  CHECK(wq.base(1) == '#');
  CHECK(vals(init_single(ctx, wq, 1)) == std::vector<int32_t>{0, 1, 2});
}

TEST_CASE("empty windows") {
  const auto g = init_empty(3, 5);
  CHECK(vals(g) == std::vector<int32_t>{0, 1, 2});
  CHECK(g.i1() == 5);
  CHECK(g.i2() == 4);
  CHECK(g.covers_empty_window());
  CHECK(g.value(4) == 3);

  CHECK(vals(init_empty(1, 1)) == std::vector<int32_t>{0});
  CHECK(init_empty(0, 2).value(1) == 0);
}

TEST_CASE("extending a window to the left") {
  const auto p = validate("GAU", {{1, 3}});
  const auto q = validate("GCAU", {{1, 4}});
  const PatternContext ctx(p);

  auto g = init_single(ctx, q, 4);          // [4,4] -> {0,1,3}
  g = extend(ctx, q, g, 3);                 // 'A' lifts entry 2
  CHECK(vals(g) == std::vector<int32_t>{0, 3, 3});
  CHECK(g.i1() == 3);
  g = extend(ctx, q, g, 2);                 // 'C' matches nothing
  CHECK(vals(g) == std::vector<int32_t>{0, 3, 3});

  auto h = init_single(ctx, q, 3);          // {0,2,2}
  extend_inplace(ctx, q, h, 2);
  CHECK(vals(h) == std::vector<int32_t>{0, 2, 2});
  CHECK(h.i1() == 2);
  CHECK(h.i2() == 3);
}

TEST_CASE("extend rejects arc openers and interval gaps") {
  const auto p = validate("GAU", {{1, 3}});
  const PatternContext ctx(p);

  // q position 1 opens (1, 2), which ends inside [2, 2]: not allowed.
  const auto q = validate("AU", {{1, 2}});
  auto g = init_single(ctx, q, 2);
  CHECK_THROWS_AS(extend(ctx, q, g, 1), Error);
  try {
    extend(ctx, q, g, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionViolated);
  }

  // The new position must abut the window.
  const auto q2 = validate("GCAU", {{1, 4}});
  auto h = init_single(ctx, q2, 4);
  try {
    extend(ctx, q2, h, 2);
    FAIL("expected an Error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IntervalMismatch);
  }
}

TEST_CASE("combining adjacent windows") {
  const auto p0 = validate("AU", {});
  const auto p = wrap(p0);  // "#AU#", arc (1,4)
  const auto q = wrap(validate("AUAU", {{1, 2}}));  // "#AUAU#", arcs (1,6),(2,3)
  const PatternContext ctx(p);

  // Left window [2,3] covers the arc (2,3): build it the way the engine
  // would, by melding the two one-base tracks with the empty inner window.
  const auto a = init_single(ctx, q, 3);
  const auto b = init_single(ctx, q, 2);
  const auto c = init_empty(p.length(), 3);
  const auto left = meld(ctx, q, a, b, c, 2, 3);
  CHECK(left.i1() == 2);
  CHECK(left.i2() == 3);

  // Right window [4,6] by extending from the single base at 6.
  auto right = init_single(ctx, q, 6);
  extend_inplace(ctx, q, right, 5);
  extend_inplace(ctx, q, right, 4);

  const auto joined = combine(left, right);
  CHECK(joined.i1() == 2);
  CHECK(joined.i2() == 6);
  for (int32_t j1 = 1; j1 <= p.length(); ++j1) {
    CHECK(joined.value(j1) == gamma_def(p, q, j1, p.length(), 2, 6));
  }
  CHECK(joined.value(p.length() + 1) == p.length());

  // An empty right window contributes nothing.
  const auto idle = combine(left, init_empty(p.length(), 4));
  CHECK(vals(idle) == vals(left));
  CHECK(idle.i2() == 3);

  // A fully matched prefix stays matched through the sentinel entry.
  const auto done = combine(GammaSeq({0, 3, 3}, 1, 2), init_empty(3, 3));
  CHECK(vals(done) == std::vector<int32_t>{0, 3, 3});
}

TEST_CASE("closing an arc over three inner windows") {
  const auto p = validate("GAU", {{1, 3}});
  const auto q = validate("GCAU", {{1, 4}});
  const PatternContext ctx(p);

  // a = [2,4], b = [1,3], c = [2,3] for the arc (1,4).
  auto a = init_single(ctx, q, 4);
  extend_inplace(ctx, q, a, 3);
  extend_inplace(ctx, q, a, 2);
  CHECK(vals(a) == std::vector<int32_t>{0, 3, 3});

  auto b = init_single(ctx, q, 3);
  extend_inplace(ctx, q, b, 2);
  // Extending at position 1 is allowed for b: the arc opened there ends at
  // 4, outside [1, 3].
  extend_inplace(ctx, q, b, 1);
  CHECK(vals(b) == std::vector<int32_t>{0, 2, 2});

  auto c = init_single(ctx, q, 3);
  extend_inplace(ctx, q, c, 2);
  CHECK(vals(c) == std::vector<int32_t>{0, 2, 2});

  const auto out = meld(ctx, q, a, b, c, 1, 4);
  CHECK(vals(out) == std::vector<int32_t>{3, 3, 3});
  CHECK(out.i1() == 1);
  CHECK(out.i2() == 4);
}

TEST_CASE("melding a bare arc") {
  const auto p = validate("AU", {{1, 2}});
  const auto q = validate("AU", {{1, 2}});
  const PatternContext ctx(p);
  const auto a = init_single(ctx, q, 2);
  const auto b = init_single(ctx, q, 1);
  const auto c = init_empty(2, 2);
  CHECK(vals(meld(ctx, q, a, b, c, 1, 2)) == std::vector<int32_t>{2, 2});
}

TEST_CASE("meld with mismatched endpoint bases degenerates to a") {
  // Arc bases C/C against pattern arc G/U: no pattern arc can sit on the
  // text arc, so closing it adds nothing beyond the a window.
  const auto p = validate("GAU", {{1, 3}});
  const auto q = validate("CGAC", {{1, 4}});
  const PatternContext ctx(p);

  auto a = init_single(ctx, q, 4);
  extend_inplace(ctx, q, a, 3);
  extend_inplace(ctx, q, a, 2);
  auto b = init_single(ctx, q, 3);
  extend_inplace(ctx, q, b, 2);
  extend_inplace(ctx, q, b, 1);
  auto c = init_single(ctx, q, 3);
  extend_inplace(ctx, q, c, 2);

  const auto out = meld(ctx, q, a, b, c, 1, 4);
  CHECK(vals(out) == vals(a));
  CHECK(vals(out) == std::vector<int32_t>{0, 2, 2});
}

TEST_CASE("shape checking") {
  CHECK_NOTHROW(GammaSeq({0, 2, 2}, 1, 4).check_shape());
  CHECK_THROWS_AS(GammaSeq({0, 0, 3}, 1, 4).check_shape(), Error);
  CHECK_THROWS_AS(GammaSeq({2, 1, 3}, 1, 4).check_shape(), Error);
  try {
    GammaSeq({0, 0, 3}, 1, 4).check_shape();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidSequence);
  }
}
