#include "chopf/corpus.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "chopf/error.hpp"

namespace chopf {

FiniteGroupTable FiniteGroupTable::from_table(std::vector<std::vector<std::size_t>> table,
                                              std::vector<std::string> names) {
  FiniteGroupTable g;
  g.order = table.size();
  if (g.order == 0) throw Error(ErrorCode::InvalidArgument, "empty group table");
  for (const auto& row : table) {
    if (row.size() != g.order) throw Error(ErrorCode::InvalidArgument, "group table must be square");
    for (auto x : row) {
      if (x >= g.order) throw Error(ErrorCode::InvalidArgument, "group table entry out of range");
    }
  }
  g.table = std::move(table);
  if (names.empty()) {
    for (std::size_t i = 0; i < g.order; ++i) names.push_back("x" + std::to_string(i));
  }
  if (names.size() != g.order) throw Error(ErrorCode::InvalidArgument, "one name per group element");
  g.names = std::move(names);

  bool found = false;
  for (std::size_t e = 0; e < g.order && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < g.order && ok; ++x) ok = g.table[e][x] == x && g.table[x][e] == x;
    if (ok) {
      g.identity = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::InvalidArgument, "group table has no identity");
  for (std::size_t a = 0; a < g.order; ++a) {
    for (std::size_t b = 0; b < g.order; ++b) {
      for (std::size_t c = 0; c < g.order; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          throw Error(ErrorCode::InvalidArgument, "group table is not associative at " + g.names[a] + "," +
                                                      g.names[b] + "," + g.names[c]);
        }
      }
    }
  }
  g.inverse.assign(g.order, g.order);
  for (std::size_t a = 0; a < g.order; ++a) {
    for (std::size_t b = 0; b < g.order; ++b) {
      if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) g.inverse[a] = b;
    }
    if (g.inverse[a] == g.order) throw Error(ErrorCode::InvalidArgument, g.names[a] + " has no inverse");
  }
  return g;
}

FiniteGroupTable FiniteGroupTable::cyclic(std::size_t n, const std::string& generator) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    names.push_back(a == 0 ? "1" : a == 1 ? generator : generator + "^" + std::to_string(a));
  }
  return from_table(std::move(t), std::move(names));
}

FiniteGroupTable FiniteGroupTable::s3() {
  // Permutations of {1,2,3} as images of 1,2,3.
  const std::vector<std::array<int, 3>> perms = {{1, 2, 3}, {2, 1, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}};
  const std::vector<std::string> names = {"()", "(12)", "(13)", "(23)", "(123)", "(132)"};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      // (ab)(x) = a(b(x))
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x] - 1];
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return from_table(std::move(t), names);
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  const std::size_t n = a.order * b.order;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) {
    names.push_back("(" + a.names[x / b.order] + "," + b.names[x % b.order] + ")");
    for (std::size_t y = 0; y < n; ++y) {
      t[x][y] = a.mul(x / b.order, y / b.order) * b.order + b.mul(x % b.order, y % b.order);
    }
  }
  return from_table(std::move(t), std::move(names));
}

bool FiniteGroupTable::is_abelian() const {
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::size_t FiniteGroupTable::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error(ErrorCode::UnknownName, "no group element " + name);
  return static_cast<std::size_t>(it - names.begin());
}

ColorHopfAlgebra group_algebra(const FiniteGroupTable& gamma, const FieldSpec& field, const Bicharacter& phi,
                               const std::vector<GroupElement>& grading, const std::string& name) {
  const FgAbGroup& G = phi.group();
  const std::size_t n = gamma.order;
  std::vector<GroupElement> degrees = grading;
  if (degrees.empty()) degrees.assign(n, G.identity());
  if (degrees.size() != n) throw Error(ErrorCode::LengthMismatch, "one degree per group element");
  for (auto& d : degrees) d = G.canonicalize(d);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!(degrees[gamma.mul(a, b)] == G.add(degrees[a], degrees[b]))) {
        throw Error(ErrorCode::GradingIncompatible,
                    "grading is not a homomorphism at (" + gamma.names[a] + "," + gamma.names[b] + ")");
      }
      if (!phi.eval(degrees[a], degrees[b]).is_one()) {
        throw Error(ErrorCode::GradingIncompatible, "phi(|" + gamma.names[a] + "|,|" + gamma.names[b] + "|) != 1");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!G.is_identity(degrees[a])) {
      throw Error(ErrorCode::GradingIncompatible,
                  "group-like (" + gamma.names[a] + "," + gamma.names[a] + ") has degree " + degrees[a].to_string() +
                      "; Delta(x) = x (x) x and epsilon(x) = 1 force degree 1_G");
    }
  }
  HopfData d;
  d.name = name.empty() ? "kG" + std::to_string(n) : name;
  d.space = GradedVectorSpace(field, G, degrees, gamma.names);
  d.phi = phi;
  d.mult = SparseMatrix(n, n * n);
  d.comult = SparseMatrix(n * n, n);
  d.antipode = SparseMatrix(n, n);
  std::vector<SparseVec::Entry> eps;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) d.mult.set_column(a * n + b, SparseVec::unit(gamma.mul(a, b), field));
    d.comult.set_column(a, SparseVec::unit(a * n + a, field));
    d.antipode.set_column(a, SparseVec::unit(gamma.inverse[a], field));
    eps.emplace_back(a, Scalar::one(field));
  }
  d.unit = SparseVec::unit(gamma.identity, field);
  d.counit = SparseVec::from_entries(std::move(eps));
  return ColorHopfAlgebra::verify(std::move(d));
}

namespace {

std::vector<std::vector<std::size_t>> exterior_monomials(std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t size = 0; size <= k; ++size) {
    std::vector<bool> pick(k, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    // prev_permutation over a descending-sorted mask enumerates subsets lexicographically.
    do {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < k; ++i) {
        if (pick[i]) s.push_back(i);
      }
      out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

}  // namespace

ColorHopfAlgebra exterior_hopf(const FieldSpec& field, const Bicharacter& phi, const std::vector<GroupElement>& degrees,
                               std::vector<std::string> generator_names, const std::string& name) {
  const FgAbGroup& G = phi.group();
  const std::size_t k = degrees.size();
  std::vector<GroupElement> gd;
  for (const auto& d : degrees) gd.push_back(G.canonicalize(d));
  if (generator_names.empty()) {
    for (std::size_t i = 0; i < k; ++i) generator_names.push_back(k == 1 ? "v" : "v" + std::to_string(i + 1));
  }
  if (generator_names.size() != k) throw Error(ErrorCode::LengthMismatch, "one name per generator");
  const Scalar minus_one(field, -1);
  for (std::size_t i = 0; i < k; ++i) {
    if (!(phi.eval(gd[i], gd[i]) == minus_one)) {
      throw Error(ErrorCode::NotOddDegree, generator_names[i] + " has degree " + gd[i].to_string() +
                                               " with phi(d,d) = " + phi.eval(gd[i], gd[i]).to_string());
    }
  }
  const auto monos = exterior_monomials(k);
  const std::size_t n = monos.size();
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<GroupElement> bdeg;
  std::vector<std::string> bname;
  for (std::size_t i = 0; i < n; ++i) {
    index[monos[i]] = i;
    GroupElement d = G.identity();
    std::string nm;
    for (auto s : monos[i]) {
      d = G.add(d, gd[s]);
      nm += generator_names[s];
    }
    bdeg.push_back(d);
    bname.push_back(nm.empty() ? "1" : nm);
  }
  HopfData h;
  h.name = name.empty() ? "Lambda(" + std::to_string(k) + ")" : name;
  h.space = GradedVectorSpace(field, G, bdeg, bname);
  h.phi = phi;
  h.mult = SparseMatrix(n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& S = monos[a];
      const auto& T = monos[b];
      bool disjoint = true;
      Scalar sign = Scalar::one(field);
      for (auto s : S) {
        for (auto t : T) {
          if (s == t) disjoint = false;
          if (s > t) sign *= phi.eval(gd[s], gd[t]);
        }
      }
      if (!disjoint) continue;
      std::vector<std::size_t> U = S;
      U.insert(U.end(), T.begin(), T.end());
      std::sort(U.begin(), U.end());
      h.mult.set_column(a * n + b, SparseVec::single(index.at(U), sign));
    }
  }
  h.unit = SparseVec::unit(0, field);
  h.counit = SparseVec::unit(0, field);

  // Delta(v_S) = prod Delta(v_s) in the braided tensor square; S(v_S) by the braided anti-homomorphism rule.
  auto mul = [&](const SparseVec& x, const SparseVec& y) {
    std::vector<SparseVec::Entry> acc;
    for (const auto& [i, a] : x.entries()) {
      for (const auto& [j, b] : y.entries()) {
        for (const auto& [r, c] : h.mult.column(i * n + j).entries()) acc.emplace_back(r, a * b * c);
      }
    }
    return SparseVec::from_entries(std::move(acc));
  };
  auto mul2 = [&](const SparseVec& x, const SparseVec& y) {
    std::vector<SparseVec::Entry> acc;
    for (const auto& [p, a] : x.entries()) {
      for (const auto& [q, b] : y.entries()) {
        const Scalar c = a * b * phi.eval(bdeg[p % n], bdeg[q / n]);
        for (const auto& [r, u] : h.mult.column((p / n) * n + q / n).entries()) {
          for (const auto& [s, v] : h.mult.column((p % n) * n + q % n).entries()) acc.emplace_back(r * n + s, c * u * v);
        }
      }
    }
    return SparseVec::from_entries(std::move(acc));
  };
  h.comult = SparseMatrix(n * n, n);
  h.antipode = SparseMatrix(n, n);
  std::vector<SparseVec> anti(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto& S = monos[a];
    if (S.empty()) {
      h.comult.set_column(a, SparseVec::unit(0, field));
      anti[a] = SparseVec::unit(0, field);
    } else {
      const std::size_t first = index.at({S.front()});
      const std::vector<std::size_t> rest_set(S.begin() + 1, S.end());
      const std::size_t rest = index.at(rest_set);
      SparseVec prim = SparseVec::from_entries({{first * n, Scalar::one(field)}, {first, Scalar::one(field)}});
      h.comult.set_column(a, mul2(prim, h.comult.column(rest)));
      // v_S = v_first * v_rest, so S(v_S) = phi(|first|, |rest|) S(v_rest) S(v_first).
      const Scalar c = phi.eval(bdeg[first], bdeg[rest]);
      anti[a] = mul(anti[rest], SparseVec::single(first, minus_one)).scaled(c);
    }
    h.antipode.set_column(a, anti[a]);
  }
  return ColorHopfAlgebra::verify(std::move(h));
}

std::string mutation_name(MutationKind kind) {
  switch (kind) {
    case MutationKind::FlipAntipodeSign:
      return "flip_antipode_sign";
    case MutationKind::DropCompatScalar:
      return "drop_compat_scalar";
    case MutationKind::BreakDegree:
      return "break_degree";
  }
  return "";
}

MutationKind parse_mutation(const std::string& name) {
  for (auto k : {MutationKind::FlipAntipodeSign, MutationKind::DropCompatScalar, MutationKind::BreakDegree}) {
    if (mutation_name(k) == name) return k;
  }
  throw Error(ErrorCode::UnknownName, "unknown mutation " + name);
}

namespace {

std::size_t unit_index(const ColorHopfAlgebra& h) {
  const SparseVec& u = h.unit();
  return u.nnz() == 1 ? u.leading_index() : h.dim();
}

}  // namespace

Mutation mutate(const ColorHopfAlgebra& h, MutationKind kind) {
  Mutation out;
  out.data = h.data();
  out.data.name = h.name() + "." + mutation_name(kind);
  const std::size_t n = h.dim();
  const std::size_t u = unit_index(h);
  switch (kind) {
    case MutationKind::FlipAntipodeSign: {
      std::size_t i = 0;
      while (i < n && (i == u || h.data().antipode.column(i).is_zero())) ++i;
      if (i == n) i = 0;
      auto entries = h.data().antipode.column(i).entries();
      entries.front().second = -entries.front().second;
      out.data.antipode.set_column(i, SparseVec::from_entries(entries));
      out.target_check = "antipode_left";
      out.description = "negated antipode entry (" + std::to_string(entries.front().first) + "," +
                        std::to_string(i) + ")";
      break;
    }
    case MutationKind::DropCompatScalar: {
      std::optional<std::pair<std::size_t, std::size_t>> pick;
      auto nonzero = [&](std::size_t i, std::size_t j) { return !h.multiply_basis(i, j).is_zero(); };
      for (std::size_t i = 0; i < n && !pick; ++i) {
        for (std::size_t j = 0; j < i && !pick; ++j) {
          if (i != u && j != u && nonzero(i, j) && !h.braid(i, j).is_one()) pick = std::make_pair(i, j);
        }
      }
      for (std::size_t i = 0; i < n && !pick; ++i) {
        for (std::size_t j = 0; j < n && !pick; ++j) {
          if (i != u && j != u && nonzero(i, j)) pick = std::make_pair(i, j);
        }
      }
      for (std::size_t i = 0; i < n && !pick; ++i) {
        for (std::size_t j = 0; j < n && !pick; ++j) {
          if (nonzero(i, j)) pick = std::make_pair(i, j);
        }
      }
      if (!pick) throw Error(ErrorCode::InvalidArgument, "algebra has a zero product");
      const auto [i, j] = *pick;
      auto entries = h.multiply_basis(i, j).entries();
      entries.front().second = -entries.front().second;
      out.data.mult.set_column(i * n + j, SparseVec::from_entries(entries));
      out.target_check = "compatibility";
      out.description = "negated product constant m(" + h.space().name(i) + "," + h.space().name(j) + ")";
      break;
    }
    case MutationKind::BreakDegree: {
      const FgAbGroup& G = h.group();
      std::optional<GroupElement> odd;
      for (const auto& g : G.box(1)) {
        if (h.phi().eval(g, g) == Scalar(h.field(), -1)) {
          odd = g;
          break;
        }
      }
      if (!odd) throw Error(ErrorCode::InvalidArgument, "no degree with phi(g,g) = -1 to shift by");
      std::size_t i = 0;
      while (i < n && i == u) ++i;
      if (i == n) i = 0;
      auto degrees = h.space().degrees();
      degrees[i] = G.add(degrees[i], *odd);
      out.data.space = GradedVectorSpace(h.field(), G, degrees, h.space().names());
      out.target_check = "compatibility";
      out.description = "moved " + h.space().name(i) + " to degree " + degrees[i].to_string();
      break;
    }
  }
  return out;
}

}  // namespace chopf
