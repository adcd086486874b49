#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "arcmatch/error.hpp"

namespace arcmatch {

using Arc = std::pair<int32_t, int32_t>;  // (left, right), 1-indexed, left < right

// The sentinel base used when a string is wrapped with an outer arc. It is
// rejected in user input, so a sentinel can only ever match another sentinel.
inline constexpr char kSentinelBase = '#';

// A base string together with a nested, endpoint-disjoint arc set.
// Positions are 1-indexed everywhere; arcs are kept sorted by left endpoint.
class ArcAnnotatedString {
 public:
  ArcAnnotatedString() = default;
  ArcAnnotatedString(std::string bases, std::vector<Arc> arcs);

  int32_t length() const { return static_cast<int32_t>(bases_.size()); }
  char base(int32_t pos) const { return bases_[pos - 1]; }
  const std::string& bases() const { return bases_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // Partner position of pos, or 0 when pos carries no arc.
  int32_t partner(int32_t pos) const { return partner_[pos - 1]; }
  bool has_outer_arc() const;

 private:
  std::string bases_;
  std::vector<Arc> arcs_;
  std::vector<int32_t> partner_;
};

// Checks nestedness and endpoint-disjointness, normalizes arc order, and
// rejects reserved symbols in the bases. Throws on violation.
ArcAnnotatedString validate(std::string bases, std::vector<Arc> arcs);

// Parses a base line plus a dot-bracket structure line of equal length.
ArcAnnotatedString parse_dotbracket(const std::string& bases,
                                    const std::string& structure);

// Renders the arc set back to dot-bracket form.
std::string to_dotbracket(const ArcAnnotatedString& s);

// Returns s unchanged when it already has an arc (1, |s|); otherwise returns
// the string extended with a sentinel base on each side and the outer arc.
ArcAnnotatedString wrap(const ArcAnnotatedString& s);

// Wraps a pattern/text pair for a subsequence query. When either side lacks
// the outer arc, *both* sides get sentinel-wrapped, even the one that already
// had an outer arc; matching a sentinel arc to a plain arc would otherwise
// change the answer.
std::pair<ArcAnnotatedString, ArcAnnotatedString> wrap_pair(
    const ArcAnnotatedString& p, const ArcAnnotatedString& q);

// True iff no arc of s crosses the cut between positions i and i+1.
// i ranges over [0, |s|]; both ends are always splittable.
bool is_arc_preserving_split(const ArcAnnotatedString& s, int32_t i);

// A read-only window [i1, i2] of an annotated string. Positions stay in the
// coordinates of the underlying string; arcs count only when both endpoints
// fall inside the window. i1 == i2 + 1 denotes the empty window.
class ArcView {
 public:
  ArcView(const ArcAnnotatedString& s, int32_t i1, int32_t i2);

  int32_t i1() const { return i1_; }
  int32_t i2() const { return i2_; }
  int32_t size() const { return i2_ - i1_ + 1; }
  char base(int32_t pos) const { return s_->base(pos); }

  // Partner of pos when the whole arc lies inside the window, else 0.
  int32_t partner_within(int32_t pos) const;

  // Arcs with both endpoints inside the window, in left-endpoint order.
  std::vector<Arc> arcs_within() const;

  // True iff no window-internal arc crosses the cut after position i,
  // where i in [i1-1, i2].
  bool splittable_after(int32_t i) const;

  const ArcAnnotatedString& underlying() const { return *s_; }

 private:
  const ArcAnnotatedString* s_;
  int32_t i1_, i2_;
};

inline ArcView full_view(const ArcAnnotatedString& s) {
  return ArcView(s, 1, s.length());
}

// One record of a dot-bracket file: '>' identifier line, base line,
// structure line.
struct DotBracketRecord {
  std::string id;
  ArcAnnotatedString value;
};

// Reads every record of a dot-bracket stream/file. Blank lines between
// records and after the last record are ignored.
std::vector<DotBracketRecord> read_dotbracket(std::istream& in,
                                              const std::string& origin);
std::vector<DotBracketRecord> read_dotbracket_file(const std::string& path);

}  // namespace arcmatch
