#include "arcmatch/gamma_seq.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace arcmatch {

namespace {

void debug_check(const GammaSeq& g) {
#ifndef NDEBUG
  g.check_shape();
#else
  (void)g;
#endif
}

}  // namespace

PatternContext::PatternContext(const ArcAnnotatedString& p)
    : p_(&p), m_(p.length()), partner_(p.length() + 1, 0) {
  for (const auto& [l, r] : p.arcs()) {
    partner_[l] = r;
    partner_[r] = l;
  }
}

GammaSeq::GammaSeq(std::vector<int32_t> values, int32_t i1, int32_t i2)
    : values_(std::move(values)), i1_(i1), i2_(i2) {}

GammaSeq GammaSeq::empty_window(int32_t m, int32_t boundary) {
  std::vector<int32_t> v(m);
  for (int32_t j1 = 1; j1 <= m; ++j1) v[j1 - 1] = j1 - 1;
  return GammaSeq(std::move(v), boundary, boundary - 1);
}

void GammaSeq::check_shape() const {
  int32_t prev = 0;
  for (int32_t j1 = 1; j1 <= m(); ++j1) {
    int32_t v = values_[j1 - 1];
    if (v < j1 - 1 || v > m() || (j1 > 1 && v < prev)) {
      fail(ErrorKind::InvalidSequence,
           "entry " + std::to_string(j1) + " = " + std::to_string(v));
    }
    prev = v;
  }
}

GammaSeq init_single(const PatternContext& ctx, const ArcAnnotatedString& q,
                     int32_t i) {
  if (i < 1 || i > q.length()) {
    fail(ErrorKind::OutOfRange, "init at " + std::to_string(i));
  }
  const int32_t m = ctx.m();
  std::vector<int32_t> v(m);
  const char qb = q.base(i);
  for (int32_t j1 = 1; j1 <= m; ++j1) {
    v[j1 - 1] = (ctx.base(j1) == qb && !ctx.opens_arc(j1)) ? j1 : j1 - 1;
  }
  GammaSeq out(std::move(v), i, i);
  debug_check(out);
  return out;
}

GammaSeq init_empty(int32_t m, int32_t boundary) {
  return GammaSeq::empty_window(m, boundary);
}

void extend_inplace(const PatternContext& ctx, const ArcAnnotatedString& q,
                    GammaSeq& g, int32_t i1) {
  if (i1 + 1 != g.i1_) {
    fail(ErrorKind::IntervalMismatch,
         "extend at " + std::to_string(i1) + " onto window [" +
             std::to_string(g.i1_) + "," + std::to_string(g.i2_) + "]");
  }
  int32_t r = q.partner(i1);
  if (r > i1 && r <= g.i2_) {
    fail(ErrorKind::PreconditionViolated,
         "position " + std::to_string(i1) + " opens arc ending at " +
             std::to_string(r) + " inside the window");
  }
  const int32_t m = ctx.m();
  const char qb = q.base(i1);
  auto& v = g.values_;
  // Entry j1 absorbs the new base exactly when it matches and j1 opens no
  // arc; ascending order only ever reads not-yet-overwritten entries.
  for (int32_t j1 = 1; j1 <= m; ++j1) {
    if (ctx.base(j1) == qb && !ctx.opens_arc(j1)) {
      v[j1 - 1] = j1 < m ? v[j1] : m;
    }
  }
  g.i1_ = i1;
  debug_check(g);
}

GammaSeq extend(const PatternContext& ctx, const ArcAnnotatedString& q,
                const GammaSeq& g, int32_t i1) {
  GammaSeq out = g;
  extend_inplace(ctx, q, out, i1);
  return out;
}

GammaSeq combine(const GammaSeq& left, const GammaSeq& right) {
  if (left.m() != right.m()) {
    fail(ErrorKind::IntervalMismatch, "combine of different pattern sizes");
  }
  if (left.i2() + 1 != right.i1()) {
    fail(ErrorKind::IntervalMismatch,
         "combine of [" + std::to_string(left.i1()) + "," +
             std::to_string(left.i2()) + "] with [" +
             std::to_string(right.i1()) + "," + std::to_string(right.i2()) +
             "]");
  }
  GammaSeq out(combine_values(PlainGammaReader{&left},
                              PlainGammaReader{&right}, left.m()),
               left.i1(), right.i2());
  debug_check(out);
  return out;
}

GammaSeq meld(const PatternContext& ctx, const ArcAnnotatedString& q,
              const GammaSeq& a, const GammaSeq& b, const GammaSeq& c,
              int32_t i1, int32_t i2) {
  if (q.partner(i1) != i2 || i1 >= i2) {
    fail(ErrorKind::PreconditionViolated,
         "(" + std::to_string(i1) + "," + std::to_string(i2) +
             ") is not an arc");
  }
  if (a.i1() != i1 + 1 || a.i2() != i2 || b.i1() != i1 || b.i2() != i2 - 1 ||
      c.i1() != i1 + 1 || c.i2() != i2 - 1) {
    fail(ErrorKind::IntervalMismatch, "meld windows do not line up");
  }
  const int32_t m = ctx.m();
  const char open_base = q.base(i1);
  const char close_base = q.base(i2);
  std::vector<int32_t> v(m);
  for (int32_t j1 = 1; j1 <= m; ++j1) {
    int32_t jr = ctx.opens_arc(j1);
    if (jr == 0) {
      // Arc-free head: best of dropping the window's open or close base.
      v[j1 - 1] = std::max(a.value(j1), b.value(j1));
    } else if (ctx.base(j1) != open_base || ctx.base(jr) != close_base) {
      // The pattern arc cannot sit on this text arc; the open base is dead.
      v[j1 - 1] = a.value(j1);
    } else {
      // Pairing the arcs swallows P[j1, jr] whole iff the inside of the
      // pattern arc embeds completely into the inside of the text arc.
#ifdef ARCMATCH_MUTATE_ARC_MATCH_RULE
      int32_t via_arc = (c.value(j1 + 1) > jr - 1) ? jr : j1 - 1;
#else
      int32_t via_arc = (c.value(j1 + 1) >= jr - 1) ? jr : j1 - 1;
#endif
      v[j1 - 1] = std::max(via_arc, a.value(j1));
    }
  }
  GammaSeq out(std::move(v), i1, i2);
  debug_check(out);
  return out;
}

}  // namespace arcmatch
