/**
 * @file group_algebra.cpp
 * @brief Cayley table validation, built-in groups, and the two Hopf structures.
 */
#include "hopfgs/group_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hopfgs {

void CayleyTable::validate() {
  if (order <= 0) throw ValidationError("group order must be positive");
  if (static_cast<int>(elements.size()) != order)
    throw ValidationError("element name list has size " + std::to_string(elements.size()) +
                          ", expected " + std::to_string(order));
  if (static_cast<int>(table.size()) != order)
    throw ValidationError("Cayley table has " + std::to_string(table.size()) + " rows, expected " +
                          std::to_string(order));
  for (int i = 0; i < order; ++i) {
    if (static_cast<int>(table[i].size()) != order)
      throw ValidationError("Cayley table row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < order; ++j)
      if (table[i][j] < 0 || table[i][j] >= order)
        throw ValidationError("Cayley table entry (" + std::to_string(i) + "," +
                              std::to_string(j) + ") out of range");
  }

  // Latin square property (cancellation).
  for (int i = 0; i < order; ++i) {
    std::vector<bool> seen_row(order, false), seen_col(order, false);
    for (int j = 0; j < order; ++j) {
      if (seen_row[table[i][j]])
        throw ValidationError("row " + std::to_string(i) + " repeats value " +
                              std::to_string(table[i][j]));
      seen_row[table[i][j]] = true;
      if (seen_col[table[j][i]])
        throw ValidationError("column " + std::to_string(i) + " repeats value " +
                              std::to_string(table[j][i]));
      seen_col[table[j][i]] = true;
    }
  }

  // Two-sided identity.
  identity = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int j = 0; j < order && ok; ++j) ok = table[e][j] == j && table[j][e] == j;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw ValidationError("Cayley table has no two-sided identity");

  // Inverses.
  inverse.assign(order, -1);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j)
      if (table[i][j] == identity && table[j][i] == identity) {
        inverse[i] = j;
        break;
      }
    if (inverse[i] < 0)
      throw ValidationError("element " + elements[i] + " has no two-sided inverse");
  }

  // Associativity.
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      for (int k = 0; k < order; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw ValidationError("associativity fails at (" + elements[i] + "," + elements[j] +
                                "," + elements[k] + ")");
}

CayleyTable CayleyTable::cyclic(int n) {
  CayleyTable G;
  G.name = "Z" + std::to_string(n);
  G.order = n;
  for (int i = 0; i < n; ++i)
    G.elements.push_back(i == 0 ? std::string("e") : "g^" + std::to_string(i));
  if (n >= 2) G.elements[1] = "g";
  G.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G.table[i][j] = (i + j) % n;
  G.validate();
  return G;
}

namespace {

std::string cycle_name(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> used(n, false);
  std::ostringstream os;
  bool any = false;
  for (int s = 0; s < n; ++s) {
    if (used[s] || p[s] == s) continue;
    os << "(";
    int x = s;
    bool first = true;
    while (!used[x]) {
      used[x] = true;
      if (!first) os << " ";
      first = false;
      os << (x + 1);
      x = p[x];
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "e";
}

}  // namespace

CayleyTable CayleyTable::symmetric(int n) {
  if (n < 1 || n > 6) throw ValidationError("symmetric group supported for 1 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  CayleyTable G;
  G.name = "S" + std::to_string(n);
  G.order = static_cast<int>(perms.size());
  for (const auto& q : perms) G.elements.push_back(cycle_name(q));
  G.table.assign(G.order, std::vector<int>(G.order));
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  for (int i = 0; i < G.order; ++i)
    for (int j = 0; j < G.order; ++j) {
      std::vector<int> comp(n);
      for (int x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      G.table[i][j] = index_of(comp);
    }
  G.validate();
  return G;
}

CayleyTable CayleyTable::builtin(const std::string& name) {
  if (name == "Z2") return cyclic(2);
  if (name == "Z3") return cyclic(3);
  if (name == "Z4") return cyclic(4);
  if (name == "S3") return symmetric(3);
  if (name == "S4") return symmetric(4);
  throw ValidationError("unknown built-in group '" + name + "' (have Z2, Z3, Z4, S3, S4)");
}

CayleyTable CayleyTable::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("group JSON must be an object");
  // Wire format nests the payload under a "group" key; accept the bare
  // payload too so embedded uses stay convenient.
  const nlohmann::json& g = j.contains("group") ? j["group"] : j;
  if (!g.is_object()) throw ValidationError("group JSON must be an object");
  CayleyTable G;
  G.name = g.value("name", std::string("G"));
  if (!g.contains("table") || !g["table"].is_array())
    throw ValidationError("group JSON needs a 'table' array");
  for (const auto& row : g["table"]) {
    std::vector<int> r;
    for (const auto& v : row) r.push_back(v.get<int>());
    G.table.push_back(std::move(r));
  }
  G.order = static_cast<int>(G.table.size());
  if (g.contains("order") && g["order"].get<int>() != G.order)
    throw ValidationError("group JSON 'order' disagrees with the table size");
  if (g.contains("elements")) {
    for (const auto& v : g["elements"]) G.elements.push_back(v.get<std::string>());
  } else {
    for (int i = 0; i < G.order; ++i) G.elements.push_back("g" + std::to_string(i));
  }
  G.validate();
  return G;
}

nlohmann::json CayleyTable::to_json() const {
  nlohmann::json g;
  g["name"] = name;
  g["order"] = order;
  g["elements"] = elements;
  g["table"] = table;
  return nlohmann::json{{"group", g}};
}

std::vector<std::vector<int>> sign_characters(const CayleyTable& G) {
  // Greedy generating set; every element gets an expression g = parent * gen.
  std::vector<int> gens;
  std::vector<int> parent(G.order, -1), via(G.order, -1);
  std::vector<bool> reached(G.order, false);
  reached[G.identity] = true;
  int reached_count = 1;
  while (reached_count < G.order) {
    int fresh = -1;
    for (int i = 0; i < G.order; ++i)
      if (!reached[i]) {
        fresh = i;
        break;
      }
    gens.push_back(fresh);
    // Close under right-multiplication by the new generator set.
    bool grew = true;
    while (grew) {
      grew = false;
      for (int x = 0; x < G.order; ++x) {
        if (!reached[x]) continue;
        for (int g : gens) {
          int y = G.table[x][g];
          if (!reached[y]) {
            reached[y] = true;
            parent[y] = x;
            via[y] = g;
            ++reached_count;
            grew = true;
          }
        }
      }
    }
  }

  std::vector<std::vector<int>> out;
  const int k = static_cast<int>(gens.size());
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> chi(G.order, 0);
    chi[G.identity] = 1;
    std::vector<int> gen_sign(k);
    for (int t = 0; t < k; ++t) gen_sign[t] = (mask >> t) & 1 ? -1 : 1;
    // Extend along the spanning expressions, then verify the hom property.
    std::vector<int> order_by_reach;
    // Repeatedly fill values whose parent is known (parent chain is acyclic).
    bool progress = true;
    while (progress) {
      progress = false;
      for (int x = 0; x < G.order; ++x) {
        if (chi[x] != 0 || parent[x] < 0 || chi[parent[x]] == 0) continue;
        int g = via[x];
        int gi = static_cast<int>(std::find(gens.begin(), gens.end(), g) - gens.begin());
        chi[x] = chi[parent[x]] * gen_sign[gi];
        progress = true;
      }
    }
    bool ok = true;
    for (int i = 0; i < G.order && ok; ++i)
      for (int j = 0; j < G.order && ok; ++j) ok = chi[G.table[i][j]] == chi[i] * chi[j];
    if (ok) out.push_back(std::move(chi));
  }
  // Trivial character first, then by first -1 position for determinism.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  return out;
}

// --- GroupAlgebra ------------------------------------------------------------

GroupAlgebra::GroupAlgebra(CayleyTable table) : group_(std::move(table)) {
  group_.validate();
}

std::string GroupAlgebra::basis_name(int id) const { return group_.elements.at(id); }

SparseVec GroupAlgebra::mult(int i, int j) const {
  return SparseVec{{group_.table.at(i).at(j), Scalar(1)}};
}

SparseVec GroupAlgebra::unit() const { return SparseVec{{group_.identity, Scalar(1)}}; }

Tensor2 GroupAlgebra::comul(int i) const { return Tensor2{{{i, i}, Scalar(1)}}; }

Scalar GroupAlgebra::counit(int) const { return Scalar(1); }

SparseVec GroupAlgebra::antipode(int i) const {
  return SparseVec{{group_.inverse.at(i), Scalar(1)}};
}

Scalar GroupAlgebra::haar(int id) const { return id == group_.identity ? Scalar(1) : Scalar(0); }

std::vector<std::vector<Scalar>> GroupAlgebra::one_dim_modules() const {
  std::vector<std::vector<Scalar>> out;
  for (const auto& chi : sign_characters(group_)) {
    std::vector<Scalar> row;
    for (int v : chi) row.emplace_back(v);
    out.push_back(std::move(row));
  }
  return out;
}

// --- FunctionAlgebra ---------------------------------------------------------

FunctionAlgebra::FunctionAlgebra(CayleyTable table) : group_(std::move(table)) {
  group_.validate();
}

std::string FunctionAlgebra::basis_name(int id) const { return "d[" + group_.elements.at(id) + "]"; }

SparseVec FunctionAlgebra::mult(int i, int j) const {
  if (i != j) return {};
  return SparseVec{{i, Scalar(1)}};
}

SparseVec FunctionAlgebra::unit() const {
  SparseVec out;
  for (int i = 0; i < group_.order; ++i) out[i] = Scalar(1);
  return out;
}

Tensor2 FunctionAlgebra::comul(int i) const {
  Tensor2 out;
  for (int x = 0; x < group_.order; ++x)
    for (int y = 0; y < group_.order; ++y)
      if (group_.table[x][y] == i) out[{x, y}] = Scalar(1);
  return out;
}

Scalar FunctionAlgebra::counit(int i) const {
  return i == group_.identity ? Scalar(1) : Scalar(0);
}

SparseVec FunctionAlgebra::antipode(int i) const {
  return SparseVec{{group_.inverse.at(i), Scalar(1)}};
}

Scalar FunctionAlgebra::haar(int) const { return Scalar(Rational(1) / group_.order); }

std::vector<std::vector<Scalar>> FunctionAlgebra::one_dim_modules() const {
  // Algebra maps of a product of lines are the point evaluations; the counit
  // (evaluation at the identity) comes first.
  std::vector<std::vector<Scalar>> out;
  std::vector<int> points;
  points.push_back(group_.identity);
  for (int g = 0; g < group_.order; ++g)
    if (g != group_.identity) points.push_back(g);
  for (int g : points) {
    std::vector<Scalar> row(static_cast<size_t>(group_.order), Scalar(0));
    row[static_cast<size_t>(g)] = Scalar(1);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace hopfgs
