#include "arcmatch/arc_string.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace arcmatch {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "length mismatch";
    case ErrorKind::UnbalancedStructure: return "unbalanced structure";
    case ErrorKind::InvalidStructureChar: return "invalid structure character";
    case ErrorKind::InvalidBase: return "invalid base";
    case ErrorKind::SharedEndpoint: return "shared arc endpoint";
    case ErrorKind::CrossingArcs: return "crossing arcs";
    case ErrorKind::OutOfRange: return "out of range";
    case ErrorKind::MissingRootArc: return "missing root arc";
    case ErrorKind::PreconditionViolated: return "precondition violated";
    case ErrorKind::IntervalMismatch: return "interval mismatch";
    case ErrorKind::InvalidSequence: return "invalid sequence";
    case ErrorKind::MalformedEncoding: return "malformed encoding";
    case ErrorKind::NotEnoughOnes: return "not enough ones";
    case ErrorKind::InstanceTooLarge: return "instance too large";
    case ErrorKind::IoFailure: return "i/o failure";
  }
  return "unknown error";
}

ArcAnnotatedString::ArcAnnotatedString(std::string bases, std::vector<Arc> arcs)
    : bases_(std::move(bases)), arcs_(std::move(arcs)) {
  partner_.assign(bases_.size(), 0);
  for (const auto& [l, r] : arcs_) {
    partner_[l - 1] = r;
    partner_[r - 1] = l;
  }
}

bool ArcAnnotatedString::has_outer_arc() const {
  return length() >= 2 && partner_[0] == length();
}

ArcAnnotatedString validate(std::string bases, std::vector<Arc> arcs) {
  const auto n = static_cast<int32_t>(bases.size());
  for (char c : bases) {
    if (c == kSentinelBase || c == '(' || c == ')' || c == '.' ||
        !std::isprint(static_cast<unsigned char>(c))) {
      fail(ErrorKind::InvalidBase,
           std::string("base symbol '") + c + "' is reserved");
    }
  }
  for (auto& [l, r] : arcs) {
    if (l > r) std::swap(l, r);
    if (l < 1 || r > n) {
      fail(ErrorKind::OutOfRange, "arc (" + std::to_string(l) + "," +
                                      std::to_string(r) + ") with |S|=" +
                                      std::to_string(n));
    }
    if (l == r) {
      fail(ErrorKind::SharedEndpoint,
           "arc endpoints coincide at " + std::to_string(l));
    }
  }
  std::sort(arcs.begin(), arcs.end());
  std::vector<int32_t> seen(n + 1, 0);
  for (const auto& [l, r] : arcs) {
    if (seen[l]++ || seen[r]++) {
      fail(ErrorKind::SharedEndpoint,
           "position " + std::to_string(seen[l] > 1 ? l : r) +
               " belongs to two arcs");
    }
  }
  // Arcs sorted by left endpoint nest iff each one closes before every arc
  // still open around it.
  std::vector<int32_t> open;
  for (const auto& [l, r] : arcs) {
    while (!open.empty() && open.back() < l) open.pop_back();
    if (!open.empty() && open.back() < r) {
      fail(ErrorKind::CrossingArcs, "arc (" + std::to_string(l) + "," +
                                        std::to_string(r) +
                                        ") crosses an enclosing arc");
    }
    open.push_back(r);
  }
  return ArcAnnotatedString(std::move(bases), std::move(arcs));
}

ArcAnnotatedString parse_dotbracket(const std::string& bases,
                                    const std::string& structure) {
  if (bases.size() != structure.size()) {
    fail(ErrorKind::LengthMismatch,
         "base line has " + std::to_string(bases.size()) +
             " symbols, structure line has " + std::to_string(structure.size()));
  }
  std::vector<Arc> arcs;
  std::vector<int32_t> open;
  for (int32_t i = 1; i <= static_cast<int32_t>(structure.size()); ++i) {
    switch (structure[i - 1]) {
      case '(':
        open.push_back(i);
        break;
      case ')':
        if (open.empty()) {
          fail(ErrorKind::UnbalancedStructure,
               "')' at position " + std::to_string(i) + " has no partner");
        }
        arcs.emplace_back(open.back(), i);
        open.pop_back();
        break;
      case '.':
        break;
      default:
        fail(ErrorKind::InvalidStructureChar,
             std::string("'") + structure[i - 1] + "' at position " +
                 std::to_string(i));
    }
  }
  if (!open.empty()) {
    fail(ErrorKind::UnbalancedStructure,
         "'(' at position " + std::to_string(open.back()) + " never closes");
  }
  return validate(bases, std::move(arcs));
}

std::string to_dotbracket(const ArcAnnotatedString& s) {
  std::string out(s.length(), '.');
  for (const auto& [l, r] : s.arcs()) {
    out[l - 1] = '(';
    out[r - 1] = ')';
  }
  return out;
}

namespace {

ArcAnnotatedString sentinel_wrap(const ArcAnnotatedString& s) {
  std::string bases;
  bases.reserve(s.length() + 2);
  bases.push_back(kSentinelBase);
  bases += s.bases();
  bases.push_back(kSentinelBase);
  std::vector<Arc> arcs;
  arcs.reserve(s.arcs().size() + 1);
  arcs.emplace_back(1, s.length() + 2);
  for (const auto& [l, r] : s.arcs()) arcs.emplace_back(l + 1, r + 1);
  return ArcAnnotatedString(std::move(bases), std::move(arcs));
}

}  // namespace

ArcAnnotatedString wrap(const ArcAnnotatedString& s) {
  if (s.has_outer_arc()) return s;
  return sentinel_wrap(s);
}

std::pair<ArcAnnotatedString, ArcAnnotatedString> wrap_pair(
    const ArcAnnotatedString& p, const ArcAnnotatedString& q) {
  if (p.has_outer_arc() && q.has_outer_arc()) return {p, q};
  return {sentinel_wrap(p), sentinel_wrap(q)};
}

bool is_arc_preserving_split(const ArcAnnotatedString& s, int32_t i) {
  if (i < 0 || i > s.length()) {
    fail(ErrorKind::OutOfRange, "split index " + std::to_string(i));
  }
  for (const auto& [l, r] : s.arcs()) {
    if (l > i) break;  // sorted by left endpoint
    if (i < r) return false;
  }
  return true;
}

ArcView::ArcView(const ArcAnnotatedString& s, int32_t i1, int32_t i2)
    : s_(&s), i1_(i1), i2_(i2) {
  if (i1 < 1 || i2 > s.length() || i1 > i2 + 1) {
    fail(ErrorKind::OutOfRange, "view [" + std::to_string(i1) + "," +
                                    std::to_string(i2) + "] of |S|=" +
                                    std::to_string(s.length()));
  }
}

int32_t ArcView::partner_within(int32_t pos) const {
  int32_t q = s_->partner(pos);
  return (q >= i1_ && q <= i2_) ? q : 0;
}

std::vector<Arc> ArcView::arcs_within() const {
  std::vector<Arc> out;
  for (const auto& [l, r] : s_->arcs()) {
    if (l >= i1_ && r <= i2_) out.emplace_back(l, r);
  }
  return out;
}

bool ArcView::splittable_after(int32_t i) const {
  for (const auto& [l, r] : s_->arcs()) {
    if (l < i1_ || l > i) continue;
    if (r <= i2_ && i < r) return false;
  }
  return true;
}

std::vector<DotBracketRecord> read_dotbracket(std::istream& in,
                                              const std::string& origin) {
  std::vector<DotBracketRecord> records;
  std::string line;
  int line_no = 0;
  auto next_line = [&](std::string& out) {
    if (!std::getline(in, out)) return false;
    if (!out.empty() && out.back() == '\r') out.pop_back();
    ++line_no;
    return true;
  };
  while (next_line(line)) {
    if (line.empty()) continue;
    if (line[0] != '>') {
      fail(ErrorKind::InvalidBase, origin + ":" + std::to_string(line_no) +
                                       ": expected '>' identifier line");
    }
    DotBracketRecord rec;
    rec.id = line.substr(1);
    std::string bases, structure;
    if (!next_line(bases) || !next_line(structure)) {
      fail(ErrorKind::LengthMismatch,
           origin + ": record '" + rec.id + "' is truncated");
    }
    try {
      rec.value = parse_dotbracket(bases, structure);
    } catch (const Error& e) {
      throw Error(e.kind(), origin + ": record '" + rec.id + "': " + e.message());
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<DotBracketRecord> read_dotbracket_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoFailure, "cannot open '" + path + "'");
  return read_dotbracket(in, path);
}

}  // namespace arcmatch
