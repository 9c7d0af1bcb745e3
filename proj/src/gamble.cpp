#include "natex/gamble.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>
#include <utility>

namespace natex {

Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  const std::size_t num_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_begin) bad();
  const std::string num(text.substr(0, pos));
  std::string den = "1";
  if (pos < text.size()) {
    if (text[pos] != '/') bad();
    ++pos;
    const std::size_t den_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin || pos != text.size()) bad();
    den = std::string(text.substr(den_begin));
  }
  const mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

int lex_compare(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) {
    throw DimensionError("lex_compare: vectors of different length");
  }
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool is_strictly_positive(const Gamble& u) {
  bool some_positive = false;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const int s = sgn(u[i]);
    if (s < 0) return false;
    if (s > 0) some_positive = true;
  }
  return some_positive;
}

bool is_nonpositive(const Gamble& u) {
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (sgn(u[i]) > 0) return false;
  }
  return true;
}

Gamble zero_gamble(Eigen::Index dim) {
  Gamble g(dim);
  g.setZero();
  return g;
}

Gamble unit_gamble(Eigen::Index dim, Eigen::Index state) {
  Gamble g = zero_gamble(dim);
  g[state] = 1;
  return g;
}

PossibilitySpace::PossibilitySpace(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw ParseError("possibility space needs at least one state");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw ParseError("duplicate state label: '" + l + "'");
    }
  }
}

GambleSet::GambleSet(Eigen::Index dim) : dim_(dim) {
  if (dim < 1) throw DimensionError("gamble set over empty space");
}

GambleSet::GambleSet(Eigen::Index dim, std::vector<Gamble> members)
    : dim_(dim), members_(std::move(members)) {
  if (dim < 1) throw DimensionError("gamble set over empty space");
  for (const auto& g : members_) {
    if (g.size() != dim_) {
      throw DimensionError("gamble length does not match space dimension");
    }
  }
  std::sort(members_.begin(), members_.end(),
            [](const Gamble& a, const Gamble& b) { return lex_compare(a, b) < 0; });
  members_.erase(std::unique(members_.begin(), members_.end(),
                             [](const Gamble& a, const Gamble& b) {
                               return lex_compare(a, b) == 0;
                             }),
                 members_.end());
}

bool GambleSet::contains(const Gamble& g) const {
  return std::binary_search(
      members_.begin(), members_.end(), g,
      [](const Gamble& a, const Gamble& b) { return lex_compare(a, b) < 0; });
}

GambleSet GambleSet::with(const Gamble& g) const {
  auto copy = members_;
  copy.push_back(g);
  return GambleSet(dim_, std::move(copy));
}

GambleSet GambleSet::without(const Gamble& g) const {
  std::vector<Gamble> kept;
  kept.reserve(members_.size());
  for (const auto& m : members_) {
    if (lex_compare(m, g) != 0) kept.push_back(m);
  }
  return GambleSet(dim_, std::move(kept));
}

bool GambleSet::subset_of(const GambleSet& other) const {
  for (const auto& m : members_) {
    if (!other.contains(m)) return false;
  }
  return true;
}

bool GambleSet::operator==(const GambleSet& other) const {
  return compare(*this, other) == 0 && dim_ == other.dim_;
}

int GambleSet::compare(const GambleSet& a, const GambleSet& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = lex_compare(a.members_[i], b.members_[i]);
    if (c != 0) return c;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

GambleSet strip_nonpositive(const GambleSet& a) {
  std::vector<Gamble> kept;
  kept.reserve(a.size());
  for (const auto& g : a.members()) {
    if (!is_nonpositive(g)) kept.push_back(g);
  }
  return GambleSet(a.dim(), std::move(kept));
}

GambleSet shift_set(const GambleSet& a, const Gamble& u) {
  if (u.size() != a.dim()) throw DimensionError("shift_set: gamble dimension mismatch");
  std::vector<Gamble> shifted;
  shifted.reserve(a.size());
  for (const auto& w : a.members()) shifted.push_back(w - u);
  return GambleSet(a.dim(), std::move(shifted));
}

GambleSet set_union(const GambleSet& a, const GambleSet& b) {
  if (a.dim() != b.dim()) throw DimensionError("set_union: dimension mismatch");
  auto all = a.members();
  all.insert(all.end(), b.members().begin(), b.members().end());
  return GambleSet(a.dim(), std::move(all));
}

Assessment::Assessment(PossibilitySpace space) : space_(std::move(space)) {}

Assessment::Assessment(PossibilitySpace space, std::vector<GambleSet> sets)
    : space_(std::move(space)), sets_(std::move(sets)) {
  for (const auto& s : sets_) {
    if (s.dim() != space_.size()) {
      throw DimensionError("assessment set does not match the space dimension");
    }
  }
  std::sort(sets_.begin(), sets_.end(), [](const GambleSet& a, const GambleSet& b) {
    return GambleSet::compare(a, b) < 0;
  });
  sets_.erase(std::unique(sets_.begin(), sets_.end(),
                          [](const GambleSet& a, const GambleSet& b) {
                            return GambleSet::compare(a, b) == 0;
                          }),
              sets_.end());
}

bool Assessment::contains(const GambleSet& q) const {
  return std::binary_search(sets_.begin(), sets_.end(), q,
                            [](const GambleSet& a, const GambleSet& b) {
                              return GambleSet::compare(a, b) < 0;
                            });
}

bool Assessment::contains_empty_set() const {
  return !sets_.empty() && sets_.front().empty();
}

}  // namespace natex
