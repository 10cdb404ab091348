#include "lkb/braid.hpp"

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lkb {

GroupPtr theta_group() {
  static const GroupPtr g = make_group(2, {}, {{0, 1}, {1, 0}}, 0);
  return g;
}

GroupPtr classical_group() {
  static const GroupPtr g = make_group(2, {{1, -1}}, {{0, 1}, {1, 0}}, 0);
  return g;
}

GroupMorphism theta_to_classical() {
  return GroupMorphism(theta_group(), classical_group(), identity_matrix(2), 1);
}

RingElement theta_monomial(long coeff, Coord a, Coord b, Coord c) {
  GroupPtr g = theta_group();
  return RingElement::monomial(g, Int(coeff), g->normalize({a, b}, c));
}

std::vector<BasisKey> enumerate_basis(int n, int k) {
  if (n < 2) throw std::invalid_argument("enumerate_basis: n must be >= 2");
  if (k < 0) throw std::invalid_argument("enumerate_basis: k must be >= 0");
  const int len = n - 1;
  std::vector<BasisKey> out;
  BasisKey cur(len, 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == len - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = rem; v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  rec(rec, 0, k);
  return out;
}

BraidWord make_braid_word(int n, std::vector<int> letters) {
  if (n < 2) throw std::invalid_argument("braid word: n must be >= 2");
  for (int l : letters) {
    int a = l > 0 ? l : -l;
    if (a < 1 || a > n - 1)
      throw std::invalid_argument("braid word: letter out of range");
  }
  return BraidWord{n, std::move(letters)};
}

BraidWord parse_braid_word(int n, const std::string& text) {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("braid word: bad token '" + tok + "'");
    }
    if (used != tok.size())
      throw std::invalid_argument("braid word: bad token '" + tok + "'");
    letters.push_back(v);
  }
  return make_braid_word(n, std::move(letters));
}

namespace {

struct BlockEntry {
  std::array<int, 3> col;
  std::array<int, 3> row;
  RingElement value;
};

// Local action on the window positions (i-1, i, i+1) when the window carries
// both basis points. Labels are the window triples; values are built with
// ring arithmetic so that monomial normal forms come out of the relations
// rather than by hand.
const std::vector<BlockEntry>& pair_block() {
  static const std::vector<BlockEntry> table = [] {
    RingElement one = theta_monomial(1, 0, 0, 0);
    RingElement t = theta_monomial(1, 0, 0, 1);
    RingElement q1 = theta_monomial(1, 1, 0, 0);
    RingElement q2 = theta_monomial(1, 0, 1, 0);
    RingElement q1q2 = q1 * q2;
    std::vector<BlockEntry> v;
    auto put = [&](std::array<int, 3> col, std::array<int, 3> row,
                   RingElement val) { v.push_back({col, row, std::move(val)}); };
    put({1, 0, 1}, {1, 0, 1}, one);
    put({1, 0, 1}, {1, 1, 0}, q2);
    put({1, 0, 1}, {0, 2, 0}, (one - t) * q2);
    put({1, 0, 1}, {0, 1, 1}, one);
    put({2, 0, 0}, {2, 0, 0}, one);
    put({2, 0, 0}, {1, 1, 0}, one);
    put({2, 0, 0}, {0, 2, 0}, one);
    put({1, 1, 0}, {1, 1, 0}, -q2);
    put({1, 1, 0}, {0, 2, 0}, (t - one) * q2);
    put({0, 2, 0}, {0, 2, 0}, -(t * q1q2));
    put({0, 1, 1}, {0, 2, 0}, (t - one) * q1q2);
    put({0, 1, 1}, {0, 1, 1}, -q1);
    put({0, 0, 2}, {0, 2, 0}, q1q2);
    put({0, 0, 2}, {0, 1, 1}, q1);
    put({0, 0, 2}, {0, 0, 2}, one);
    return v;
  }();
  return table;
}

// Local action when the window carries one basis point and the other sits
// outside it. The parameter tracks which of the two ordered points is the
// moving one: a static point left of the window leaves the window point as
// the right member of the pair (windings q2), a static point right of it
// leaves the window point as the left member (windings q1). This matches
// the restriction pattern of the two-point block, whose column 110 / 101
// rows carry q2 for the right point and whose 011 / 002 columns carry q1
// for the left point.
const std::vector<BlockEntry>& unit_block(bool static_left) {
  static const std::vector<BlockEntry> static_left_table = [] {
    RingElement one = theta_monomial(1, 0, 0, 0);
    RingElement q2 = theta_monomial(1, 0, 1, 0);
    std::vector<BlockEntry> v;
    v.push_back({{1, 0, 0}, {1, 0, 0}, one});
    v.push_back({{1, 0, 0}, {0, 1, 0}, one});
    v.push_back({{0, 1, 0}, {0, 1, 0}, -q2});
    v.push_back({{0, 0, 1}, {0, 1, 0}, q2});
    v.push_back({{0, 0, 1}, {0, 0, 1}, one});
    return v;
  }();
  static const std::vector<BlockEntry> static_right_table = [] {
    RingElement one = theta_monomial(1, 0, 0, 0);
    RingElement q1 = theta_monomial(1, 1, 0, 0);
    std::vector<BlockEntry> v;
    v.push_back({{1, 0, 0}, {1, 0, 0}, one});
    v.push_back({{1, 0, 0}, {0, 1, 0}, one});
    v.push_back({{0, 1, 0}, {0, 1, 0}, -q1});
    v.push_back({{0, 0, 1}, {0, 1, 0}, q1});
    v.push_back({{0, 0, 1}, {0, 0, 1}, one});
    return v;
  }();
  return static_left ? static_left_table : static_right_table;
}

}  // namespace

RepMatrix sigma_matrix(int n, int i) {
  if (n < 3) throw std::invalid_argument("sigma_matrix: n must be >= 3");
  if (i < 1 || i > n - 1)
    throw std::invalid_argument("sigma_matrix: generator index out of range");
  GroupPtr g = theta_group();
  std::vector<BasisKey> keys = enumerate_basis(n, 2);
  RepMatrix a(g, keys);

  const int len = n - 1;
  // 0-based tuple indices of the window around strand i; lo is absent for
  // i = 1 and hi for i = n-1, in which case that slot of a label reads 0.
  const int lo = i - 2, mid = i - 1, hi = i;
  auto slot = [&](const BasisKey& t, int idx) -> int {
    return (idx >= 0 && idx < len) ? t[idx] : 0;
  };

  RingElement one = theta_monomial(1, 0, 0, 0);
  for (const BasisKey& t : keys) {
    std::array<int, 3> trip = {slot(t, lo), slot(t, mid), slot(t, hi)};
    int s = trip[0] + trip[1] + trip[2];
    if (s == 0) {
      a.set(t, t, one);
      continue;
    }
    const std::vector<BlockEntry>* table;
    if (s == 2) {
      table = &pair_block();
    } else {
      int other = -1;
      for (int idx = 0; idx < len; ++idx) {
        if (idx == lo || idx == mid || idx == hi) continue;
        if (t[idx] != 0) {
          other = idx;
          break;
        }
      }
      table = &unit_block(other < lo);
    }
    for (const BlockEntry& be : *table) {
      if (be.col != trip) continue;
      if ((lo < 0 && be.row[0] != 0) || (hi >= len && be.row[2] != 0)) continue;
      BasisKey r = t;
      if (lo >= 0) r[lo] = be.row[0];
      r[mid] = be.row[1];
      if (hi < len) r[hi] = be.row[2];
      a.set(r, t, be.value);
    }
  }
  return a;
}

RepMatrix word_matrix(const BraidWord& w) {
  if (w.n < 3) throw std::invalid_argument("word_matrix: n must be >= 3");
  GroupPtr g = theta_group();
  RepMatrix acc = RepMatrix::identity(g, enumerate_basis(w.n, 2));
  std::map<int, RepMatrix> pos, neg;
  auto positive = [&](int i) -> const RepMatrix& {
    auto it = pos.find(i);
    if (it == pos.end()) it = pos.emplace(i, sigma_matrix(w.n, i)).first;
    return it->second;
  };
  for (int letter : w.letters) {
    int i = letter > 0 ? letter : -letter;
    if (i < 1 || i > w.n - 1)
      throw std::invalid_argument("word_matrix: letter out of range");
    if (letter > 0) {
      acc = acc * positive(i);
    } else {
      auto it = neg.find(i);
      if (it == neg.end())
        it = neg.emplace(i, invert_unit_triangular(positive(i))).first;
      acc = acc * it->second;
    }
  }
  return acc;
}

Report verify_braid_relations(int n, const GeneratorProvider& gen) {
  if (n < 3)
    throw std::invalid_argument("verify_braid_relations: n must be >= 3");
  std::vector<RepMatrix> g;
  g.reserve(static_cast<size_t>(n) - 1);
  for (int i = 1; i <= n - 1; ++i) g.push_back(gen(i));
  Report rep;
  for (int a = 1; a <= n - 1; ++a) {
    for (int b = a + 1; b <= n - 1; ++b) {
      const RepMatrix& ma = g[static_cast<size_t>(a) - 1];
      const RepMatrix& mb = g[static_cast<size_t>(b) - 1];
      bool ok;
      std::string name;
      if (b == a + 1) {
        ok = (ma * mb * ma == mb * ma * mb);
        name = "braid(" + std::to_string(a) + "," + std::to_string(b) + ")";
      } else {
        ok = (ma * mb == mb * ma);
        name = "commute(" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
      rep.items.push_back({std::move(name), ok});
    }
  }
  return rep;
}

Report verify_braid_relations(int n) {
  return verify_braid_relations(n, [n](int i) { return sigma_matrix(n, i); });
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n)
    throw std::invalid_argument("braid_equal: words over different strand counts");
  return word_matrix(a) == word_matrix(b);
}

RepMatrix classical_sigma_matrix(int n, int i) {
  return matrix_map(RingMorphism(theta_to_classical()), sigma_matrix(n, i));
}

}  // namespace lkb
