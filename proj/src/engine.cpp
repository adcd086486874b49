#include "arcmatch/engine.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <deque>
#include <variant>

#include "arcmatch/arc_tree.hpp"
#include "arcmatch/succinct.hpp"

namespace arcmatch {

const char* to_string(EngineMode mode) {
  switch (mode) {
    case EngineMode::kUncompressed: return "uncompressed";
    case EngineMode::kCompressDecompress: return "compress-decompress";
    case EngineMode::kCompressRandomAccess: return "compress-random-access";
  }
  return "?";
}

std::optional<EngineMode> parse_mode(std::string_view name) {
  if (name == "uncompressed") return EngineMode::kUncompressed;
  if (name == "compress-decompress") return EngineMode::kCompressDecompress;
  if (name == "compress-random-access") {
    return EngineMode::kCompressRandomAccess;
  }
  return std::nullopt;
}

namespace {

// A retained sequence, plain or frozen.
using GammaValue = std::variant<GammaSeq, CompressedGamma>;

int32_t value_i1(const GammaValue& v) {
  return std::visit([](const auto& x) { return x.i1(); }, v);
}

int32_t value_i2(const GammaValue& v) {
  return std::visit([](const auto& x) { return x.i2(); }, v);
}

int64_t value_bits(const GammaValue& v) {
  if (const auto* plain = std::get_if<GammaSeq>(&v)) {
    return 32 * static_cast<int64_t>(plain->m());
  }
  return std::get<CompressedGamma>(v).payload_bits();
}

class Engine {
 public:
  Engine(const PatternContext& ctx, const ArcAnnotatedString& q,
         const ArcTree& tree, const EngineConfig& config, EngineStats& stats)
      : ctx_(ctx), q_(q), tree_(tree), config_(config), stats_(stats) {}

  GammaSeq run() {
    std::deque<Frame> stack;
    std::optional<GammaSeq> returned;
    stack.push_back(Frame{tree_.root()});
    bool entering = true;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (entering) {
        if (tree_.is_leaf(f.node)) {
          start_tracks(f);
          returned = finish_arc(f);
          stack.pop_back();
          entering = false;
          continue;
        }
        // Heavy child first, before this frame holds anything.
        f.awaiting_heavy = true;
        note_descent(f);
        stack.push_back(Frame{tree_.heavy_child(f.node)});
        continue;
      }
      descent_done(f);
      if (f.awaiting_heavy) {
        f.awaiting_heavy = false;
        // The child's result is already in the live count; just store it.
        f.heavy = GammaValue(std::move(*returned));
        returned.reset();
        start_tracks(f);
      } else {
        after_light_return(f);
        absorb_held(f, GammaValue(std::move(*returned)));
        returned.reset();
      }
      // Walk children right to left until a light descent interrupts.
      bool descended = false;
      while (f.k >= 1) {
        const int32_t c = tree_.child(f.node, f.k);
        if (c == tree_.heavy_child(f.node)) {
          GammaValue rh = std::move(*f.heavy);
          f.heavy.reset();
          absorb_held(f, std::move(rh));
        } else {
          before_light_descent(f);
          note_descent(f);
          stack.push_back(Frame{c});
          entering = true;
          descended = true;
          break;
        }
      }
      if (descended) continue;
      returned = finish_arc(f);
      stack.pop_back();
      entering = false;
    }
    assert(live_ == 1);  // only the final sequence remains
    --live_;
    return std::move(*returned);
  }

 private:
  struct Frame {
    int32_t node;
    int32_t k = 0;  // child being processed, counting down
    bool awaiting_heavy = false;
    std::optional<GammaValue> full;   // window [x, right(node)]
    std::optional<GammaValue> trim;   // window [x, right(node) - 1]
    std::optional<GammaValue> heavy;  // heavy child's result until merged
    int64_t bits_at_descent = 0;
  };

  // --- retention accounting -----------------------------------------------

  GammaValue hold(GammaSeq s) {
    bump_live();
    return GammaValue(std::move(s));
  }

  void drop(std::optional<GammaValue>& slot) {
    if (slot) {
      --live_;
      slot.reset();
    }
  }

  void bump_live() {
    ++live_;
    if (config_.collect_stats) {
      stats_.peak_live_gamma = std::max(stats_.peak_live_gamma, live_);
    }
  }

  int64_t frame_bits(const Frame& f) const {
    int64_t bits = 0;
    if (f.full) bits += value_bits(*f.full);
    if (f.trim) bits += value_bits(*f.trim);
    if (f.heavy) bits += value_bits(*f.heavy);
    return bits;
  }

  void note_descent(Frame& f) {
    f.bits_at_descent = frame_bits(f);
    ancestor_bits_ += f.bits_at_descent;
    if (config_.collect_stats) {
      stats_.peak_gamma_bits = std::max(stats_.peak_gamma_bits, ancestor_bits_);
    }
  }

  void descent_done(Frame& f) { ancestor_bits_ -= f.bits_at_descent; }

  // --- mode handling at light boundaries ----------------------------------

  void freeze_slot(std::optional<GammaValue>& slot) {
    if (!slot || std::holds_alternative<CompressedGamma>(*slot)) return;
    GammaSeq& plain = std::get<GammaSeq>(*slot);
    CompressedGamma frozen = encode(plain);
    ++stats_.encode_ops;
    if (config_.verify_compression) {
      const GammaSeq back = decode(frozen);
      if (back.values().size() != plain.values().size() ||
          !std::equal(back.values().begin(), back.values().end(),
                      plain.values().begin()) ||
          back.i1() != plain.i1() || back.i2() != plain.i2()) {
        fail(ErrorKind::MalformedEncoding, "freeze/thaw round trip diverged");
      }
    }
    *slot = GammaValue(std::move(frozen));
  }

  void thaw_slot(std::optional<GammaValue>& slot) {
    if (!slot || std::holds_alternative<GammaSeq>(*slot)) return;
    GammaSeq plain = decode(std::get<CompressedGamma>(*slot));
    ++stats_.decode_ops;
    *slot = GammaValue(std::move(plain));
  }

  void before_light_descent(Frame& f) {
    if (config_.mode == EngineMode::kUncompressed) return;
    freeze_slot(f.full);
    freeze_slot(f.trim);
    freeze_slot(f.heavy);
  }

  void after_light_return(Frame& f) {
    if (config_.mode != EngineMode::kCompressDecompress) return;
    thaw_slot(f.full);
    thaw_slot(f.trim);
    thaw_slot(f.heavy);
  }

  // --- arc processing ------------------------------------------------------

  void observe(const GammaSeq& g) {
    if (config_.gamma_observer) config_.gamma_observer(g);
  }

  // Two window tracks seeded at the right endpoint and grown leftward over
  // the run of arc-free positions after the last child (down to the left
  // endpoint itself for childless arcs).
  void start_tracks(Frame& f) {
    const int32_t il = tree_.left(f.node);
    const int32_t ir = tree_.right(f.node);
    const int32_t s = tree_.child_count(f.node);
    f.full = hold(init_single(ctx_, q_, ir));
    stats_.initialize += 1;
    observe(std::get<GammaSeq>(*f.full));
    f.trim = hold(init_single(ctx_, q_, ir - 1));
    stats_.initialize += 1;
    observe(std::get<GammaSeq>(*f.trim));
    const int32_t blocked = s > 0 ? tree_.right(tree_.child(f.node, s)) : il;
    if (blocked == ir - 1) {
      // The grown-down trim track starts as the empty window; the freshly
      // initialized single-base value sits inside a child and is unusable.
      *f.trim = GammaValue(GammaSeq::empty_window(ctx_.m(), ir));
      observe(std::get<GammaSeq>(*f.trim));
    } else {
      extend_track(f.trim, ir - 2, blocked + 1);
    }
    extend_track(f.full, ir - 1, blocked + 1);
    f.k = s;
  }

  void extend_track(std::optional<GammaValue>& slot, int32_t from,
                    int32_t down_to) {
    GammaSeq& g = std::get<GammaSeq>(*slot);
    for (int32_t i = from; i >= down_to; --i) {
      extend_inplace(ctx_, q_, g, i);
      stats_.extend += 1;
      observe(g);
    }
  }

  GammaSeq combine_held(const GammaValue& left, const GammaValue& right) {
    if (value_i2(left) + 1 != value_i1(right)) {
      fail(ErrorKind::IntervalMismatch, "merge windows do not abut");
    }
    std::vector<int32_t> merged = std::visit(
        [&](const auto& l, const auto& r) {
          auto reader = [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, GammaSeq>) {
              return PlainGammaReader{&x};
            } else {
              return CompressedGammaReader{&x};
            }
          };
          return combine_values(reader(l), reader(r), ctx_.m());
        },
        left, right);
    GammaSeq out(std::move(merged), value_i1(left), value_i2(right));
    stats_.combine += 1;
    observe(out);
    return out;
  }

  // Merges a child's sequence into both tracks, then grows them across the
  // arc-free run before that child.
  void absorb_held(Frame& f, GammaValue child_value) {
    const int32_t node = f.node;
    const int32_t c = tree_.child(node, f.k);
    std::optional<GammaValue> held(std::move(child_value));

    std::optional<GammaValue> new_full(hold(combine_held(*held, *f.full)));
    drop(f.full);
    f.full = std::move(new_full);

    std::optional<GammaValue> new_trim(hold(combine_held(*held, *f.trim)));
    drop(f.trim);
    f.trim = std::move(new_trim);
    drop(held);

    const int32_t lo =
        (f.k > 1 ? tree_.right(tree_.child(node, f.k - 1)) : tree_.left(node)) +
        1;
    extend_track(f.full, tree_.left(c) - 1, lo);
    extend_track(f.trim, tree_.left(c) - 1, lo);
    --f.k;
  }

  // Closes the node's own arc: tracks arrive as the two inner windows, the
  // trim track is duplicated before its final leftward step so the melder
  // sees all three.
  GammaSeq finish_arc(Frame& f) {
    const int32_t il = tree_.left(f.node);
    const int32_t ir = tree_.right(f.node);
    GammaSeq& full = std::get<GammaSeq>(*f.full);
    GammaSeq& trim = std::get<GammaSeq>(*f.trim);
    GammaSeq inner = trim;
    bump_live();
    extend_inplace(ctx_, q_, trim, il);
    stats_.extend += 1;
    observe(trim);
    GammaSeq out = meld(ctx_, q_, full, trim, inner, il, ir);
    stats_.meld += 1;
    bump_live();
    observe(out);
    --live_;  // inner
    drop(f.full);
    drop(f.trim);
    return out;
  }

  const PatternContext& ctx_;
  const ArcAnnotatedString& q_;
  const ArcTree& tree_;
  const EngineConfig& config_;
  EngineStats& stats_;
  int32_t live_ = 0;
  int64_t ancestor_bits_ = 0;
};

}  // namespace

NapsResult naps(const ArcAnnotatedString& p, const ArcAnnotatedString& q,
                const EngineConfig& config) {
  NapsResult result;
  EngineStats& stats = result.stats;
  stats.m = p.length();
  stats.n_input = q.length();
  stats.arcs_p = static_cast<int32_t>(p.arcs().size());
  stats.arcs_q_input = static_cast<int32_t>(q.arcs().size());

  const auto t0 = std::chrono::steady_clock::now();

  const ArcAnnotatedString* text = &q;
  ArcAnnotatedString wrapped;
  if (!q.has_outer_arc()) {
    wrapped = wrap(q);
    text = &wrapped;
  }
  stats.n_effective = text->length();
  stats.arcs_q_effective = static_cast<int32_t>(text->arcs().size());

  const PatternContext ctx(p);
  const ArcTree tree = build_arc_tree(*text);
  stats.lightdepth_max = tree.max_lightdepth();
  for (int32_t v = 0; v < tree.node_count(); ++v) {
    int64_t inside = 0;
    for (int32_t k = 1; k <= tree.child_count(v); ++k) {
      const int32_t c = tree.child(v, k);
      inside += tree.right(c) - tree.left(c) + 1;
    }
    stats.sum_spaces += (tree.right(v) - tree.left(v) + 1) - inside;
  }

  Engine engine(ctx, *text, tree, config, stats);
  const GammaSeq root = engine.run();
  result.gamma_root = root.value(1);
  result.is_subsequence = result.gamma_root == p.length();

  stats.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  return result;
}

int32_t longest_prefix(const ArcAnnotatedString& p,
                       const ArcAnnotatedString& q,
                       const EngineConfig& config) {
  // The pattern stays unwrapped, so gamma_root is already in its
  // coordinates; wrapping it would leave only the all-or-nothing cuts.
  return naps(p, q, config).gamma_root;
}

}  // namespace arcmatch
