#include "arcmatch/oracle.hpp"

#include <algorithm>
#include <string>

namespace arcmatch {

namespace {

struct EmbedSearch {
  const ArcView& p;
  const ArcView& q;
  std::vector<int32_t> image;    // image[j - p.i1()] = text position, 0 = unset
  std::vector<int32_t> preimage; // preimage[i - q.i1()] = pattern position

  EmbedSearch(const ArcView& p_in, const ArcView& q_in)
      : p(p_in), q(q_in), image(std::max(p.size(), 0), 0),
        preimage(std::max(q.size(), 0), 0) {}

  bool place(int32_t j, int32_t min_i) {
    if (j > p.i2()) return true;
    int32_t slack = q.i2() - (p.i2() - j);  // room for the rest of the pattern
    int32_t jl = p.partner_within(j);
    if (jl != 0 && jl < j) {
      // Right endpoint of a pattern arc: the image is forced onto the
      // partner of its left endpoint's image.
      int32_t forced = q.partner_within(image[jl - p.i1()]);
      if (forced == 0 || forced < min_i || forced > slack) return false;
      return try_at(j, forced);
    }
    for (int32_t i = min_i; i <= slack; ++i) {
      if (try_at(j, i)) return true;
    }
    return false;
  }

  bool try_at(int32_t j, int32_t i) {
    if (p.base(j) != q.base(i)) return false;
    // A text arc may not connect two images of unrelated pattern positions.
    int32_t qp = q.partner_within(i);
    if (qp != 0 && qp < i && preimage[qp - q.i1()] != 0 &&
        p.partner_within(preimage[qp - q.i1()]) != j) {
      return false;
    }
    image[j - p.i1()] = i;
    preimage[i - q.i1()] = j;
    if (place(j + 1, i + 1)) return true;
    image[j - p.i1()] = 0;
    preimage[i - q.i1()] = 0;
    return false;
  }
};

}  // namespace

bool embed_exists(const ArcView& p, const ArcView& q,
                  std::vector<int32_t>* witness, int32_t cap) {
  if (q.size() > cap) {
    fail(ErrorKind::InstanceTooLarge,
         "text window of " + std::to_string(q.size()) +
             " exceeds oracle cap " + std::to_string(cap));
  }
  if (p.size() > q.size()) return false;
  EmbedSearch search(p, q);
  if (!search.place(p.i1(), q.i1())) return false;
  if (witness) *witness = std::move(search.image);
  return true;
}

bool embed_exists(const ArcAnnotatedString& p, const ArcAnnotatedString& q,
                  std::vector<int32_t>* witness, int32_t cap) {
  return embed_exists(full_view(p), full_view(q), witness, cap);
}

int32_t gamma_def(const ArcAnnotatedString& p, const ArcAnnotatedString& q,
                  int32_t j1, int32_t j2, int32_t i1, int32_t i2,
                  int32_t cap) {
  ArcView pattern_window(p, j1, j2);
  ArcView text_window(q, i1, i2);
  for (int32_t k = j2; k >= j1; --k) {
    if (!pattern_window.splittable_after(k)) continue;
    if (embed_exists(ArcView(p, j1, k), text_window, nullptr, cap)) return k;
  }
  return j1 - 1;  // the empty prefix always embeds and always splits
}

GammaRecurrence::GammaRecurrence(const ArcAnnotatedString& p,
                                 const ArcAnnotatedString& q)
    : p_(&p), q_(&q) {}

int32_t GammaRecurrence::operator()(int32_t j1, int32_t j2, int32_t i1,
                                    int32_t i2) {
  return eval(j1, j2, i1, i2);
}

int32_t GammaRecurrence::root() {
  return eval(1, p_->length(), 1, q_->length());
}

int32_t GammaRecurrence::eval(int32_t j1, int32_t j2, int32_t i1, int32_t i2) {
  if (j1 > j2) return j1 - 1;
  if (i1 > i2) return j1 - 1;  // nothing embeds into an empty window

  uint64_t key = (static_cast<uint64_t>(j1) << 48) |
                 (static_cast<uint64_t>(j2) << 32) |
                 (static_cast<uint64_t>(i1) << 16) | static_cast<uint64_t>(i2);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  int32_t jr = p_->partner(j1);
  bool j1_opens_arc = jr > j1 && jr <= j2;

  int32_t res;
  if (i1 == i2) {
    res = (!j1_opens_arc && p_->base(j1) == q_->base(i1)) ? j1 : j1 - 1;
  } else {
    int32_t r = q_->partner(i1);
    if (r <= i1 || r > i2) {
      // First text base carries no arc inside the window: greedily absorb it
      // when it matches an arc-free first pattern base.
      if (!j1_opens_arc && p_->base(j1) == q_->base(i1)) {
        res = eval(j1 + 1, j2, i1 + 1, i2);
      } else {
        res = eval(j1, j2, i1 + 1, i2);
      }
    } else if (r < i2) {
      // Arc (i1, r) splits the window; chain the two halves.
      res = eval(eval(j1, j2, i1, r) + 1, j2, r + 1, i2);
    } else {
      // Arc spans the whole window.
      if (!j1_opens_arc) {
        res = std::max(eval(j1, j2, i1 + 1, i2), eval(j1, j2, i1, i2 - 1));
      } else if (p_->base(j1) != q_->base(i1) ||
                 p_->base(jr) != q_->base(i2)) {
        res = eval(j1, j2, i1 + 1, i2);
      } else {
        // Both endpoint bases agree: pairing the two arcs swallows
        // P[j1, jr] whole iff the strict insides embed completely.
        int32_t via_arc =
            (eval(j1 + 1, jr - 1, i1 + 1, i2 - 1) == jr - 1) ? jr : j1 - 1;
        res = std::max(via_arc, eval(j1, j2, i1 + 1, i2));
      }
    }
  }
  memo_.emplace(key, res);
  return res;
}

namespace {

void arcsets_on(int32_t lo, int32_t hi, std::vector<std::vector<Arc>>& out) {
  out.clear();
  if (lo > hi) {
    out.push_back({});
    return;
  }
  std::vector<std::vector<Arc>> rest, inner, outer;
  arcsets_on(lo + 1, hi, rest);
  for (auto& s : rest) out.push_back(std::move(s));  // lo left unpaired
  for (int32_t j = lo + 1; j <= hi; ++j) {
    arcsets_on(lo + 1, j - 1, inner);
    arcsets_on(j + 1, hi, outer);
    for (const auto& a : inner) {
      for (const auto& b : outer) {
        std::vector<Arc> s;
        s.reserve(1 + a.size() + b.size());
        s.emplace_back(lo, j);
        s.insert(s.end(), a.begin(), a.end());
        s.insert(s.end(), b.begin(), b.end());
        out.push_back(std::move(s));
      }
    }
  }
}

}  // namespace

std::vector<std::vector<Arc>> enumerate_arcsets(int32_t len) {
  std::vector<std::vector<Arc>> out;
  arcsets_on(1, len, out);
  return out;
}

}  // namespace arcmatch
