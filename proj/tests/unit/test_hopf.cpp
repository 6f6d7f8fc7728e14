#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "hopfgs/group_algebra.hpp"
#include "hopfgs/modules.hpp"

using namespace hopfgs;

TEST_CASE("cayley table builtins and validation") {
  CayleyTable z2 = CayleyTable::builtin("Z2");
  CHECK(z2.order == 2);
  CayleyTable s3 = CayleyTable::symmetric(3);
  CHECK(s3.order == 6);
  CHECK(CayleyTable::builtin("S4").order == 24);
  CHECK_THROWS_AS(CayleyTable::builtin("nope"), ValidationError);

  // A constant table is not a group.
  CayleyTable bad;
  bad.name = "bad";
  bad.order = 2;
  bad.elements = {"x", "y"};
  bad.table = {{0, 0}, {0, 0}};
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("cayley JSON round trip") {
  CayleyTable s3 = CayleyTable::builtin("S3");
  nlohmann::json j = s3.to_json();
  CHECK(j["group"]["order"] == 6);
  CayleyTable back = CayleyTable::from_json(j);
  CHECK(back.order == 6);
  CHECK(back.table == s3.table);

  nlohmann::json broken = j;
  broken["group"]["table"][0][0] = 7;  // out of range
  CHECK_THROWS_AS(CayleyTable::from_json(broken), ValidationError);
}

TEST_CASE("group algebra of Z2") {
  GroupAlgebra a(CayleyTable::builtin("Z2"));
  CHECK(a.dim() == 2);
  // S^2 = id.
  CHECK(check_kac(a, 0));
  // Haar h(e) = 1, h(g) = 0.
  CHECK(a.haar(0) == Scalar(1));
  CHECK(a.haar(1) == Scalar(0));
  // Haar two-sided invariance on the basis: (h x id)Delta(x) = h(x) 1.
  for (int i = 0; i < a.dim(); ++i) {
    SparseVec left, right;
    for (const auto& [pair, c] : a.comul(i)) {
      axpy(left, c * a.haar(pair.first), SparseVec{{pair.second, Scalar(1)}});
      axpy(right, c * a.haar(pair.second), SparseVec{{pair.first, Scalar(1)}});
    }
    SparseVec expect = a.scaled_unit(a.haar(i));
    CHECK(left == expect);
    CHECK(right == expect);
  }
}

TEST_CASE("function algebra of S3") {
  FunctionAlgebra o(CayleyTable::builtin("S3"));
  CHECK(o.dim() == 6);
  // Commutative pointwise product.
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(o.mult(i, j) == o.mult(j, i));
  // Delta is dual to group multiplication: Delta(d_g) = sum_{xy=g} d_x (x) d_y.
  const CayleyTable& g = o.group();
  for (int id = 0; id < 6; ++id) {
    Tensor2 cm = o.comul(id);
    int terms = 0;
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y)
        if (g.table[static_cast<size_t>(x)][static_cast<size_t>(y)] == id) {
          ++terms;
          auto it = cm.find({x, y});
          REQUIRE(it != cm.end());
          CHECK(it->second == Scalar(1));
        }
    CHECK(static_cast<int>(cm.size()) == terms);
  }
  CHECK(check_kac(o, 0));
}

TEST_CASE("axiom reports") {
  GroupAlgebra s3(CayleyTable::builtin("S3"));
  AxiomReport rep = check_hopf_axioms(s3, 0);
  CHECK(rep.pass);
  CHECK(rep.failures.empty());

  FunctionAlgebra os3(CayleyTable::builtin("S3"));
  CHECK(check_hopf_axioms(os3, 0).pass);
}

namespace {

/// Fault injection: swap two antipode values of C[Z3].
class CorruptedZ3 : public GroupAlgebra {
 public:
  CorruptedZ3() : GroupAlgebra(CayleyTable::builtin("Z3")) {}
  using GroupAlgebra::antipode;
  SparseVec antipode(int id) const override {
    // Correct would be S(g) = g^{-1}; the corrupted version fixes everything.
    return SparseVec{{id, Scalar(1)}};
  }
};

}  // namespace

TEST_CASE("corrupted antipode is caught with a witness") {
  CorruptedZ3 bad;
  AxiomReport rep = check_hopf_axioms(bad, 0);
  CHECK(!rep.pass);
  REQUIRE(!rep.failures.empty());
  bool antipode_mentioned = false;
  for (const auto& f : rep.failures)
    if (f.find("antipode") != std::string::npos) antipode_mentioned = true;
  CHECK(antipode_mentioned);
}

TEST_CASE("sign characters") {
  CHECK(sign_characters(CayleyTable::builtin("Z3")).size() == 1);
  CHECK(sign_characters(CayleyTable::builtin("Z2")).size() == 2);
  CHECK(sign_characters(CayleyTable::builtin("Z4")).size() == 2);
  auto s3 = sign_characters(CayleyTable::builtin("S3"));
  REQUIRE(s3.size() == 2);
  // First is trivial.
  for (int v : s3[0]) CHECK(v == 1);
  // The sign character is a homomorphism with at least one -1.
  bool has_minus = false;
  for (int v : s3[1])
    if (v == -1) has_minus = true;
  CHECK(has_minus);
}

TEST_CASE("one dimensional modules contain the counit") {
  GroupAlgebra z4(CayleyTable::builtin("Z4"));
  auto mods = z4.one_dim_modules();
  REQUIRE(!mods.empty());
  for (int i = 0; i < z4.dim(); ++i) CHECK(mods[0][static_cast<size_t>(i)] == z4.counit(i));
  CHECK(mods.size() == 2);  // trivial and the order-2 character
}

TEST_CASE("module builders validate") {
  GroupAlgebra s3(CayleyTable::builtin("S3"));
  CHECK(check_bimodule(trivial_bimodule(s3)).pass);
  CHECK(check_bimodule(regular_bimodule(s3)).pass);
  CHECK(check_bimodule(random_bimodule2(s3, 7)).pass);
  CHECK(check_right_module(trivial_right_module(s3)).pass);

  // Seeded reproducibility.
  Bimodule a = random_bimodule2(s3, 99), b = random_bimodule2(s3, 99);
  for (int i = 0; i < s3.dim(); ++i) {
    CHECK(a.left[static_cast<size_t>(i)] == b.left[static_cast<size_t>(i)]);
    CHECK(a.right[static_cast<size_t>(i)] == b.right[static_cast<size_t>(i)]);
  }
}
