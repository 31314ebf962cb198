#include <doctest.h>

#include <random>
#include <vector>

#include "semiq/forms.hpp"
#include "semiq/repcore.hpp"
#include "test_util.hpp"

using namespace semiq;
using testutil::fixture;

namespace {

Representation interval(int n, int i, int j) { return interval_rep(n, Interval{i, j}); }

DimVector random_dims(std::mt19937& gen, int n, Int hi) {
  std::uniform_int_distribution<Int> dist(0, hi);
  DimVector v(n);
  for (int i = 0; i < n; ++i) v[i] = dist(gen);
  return v;
}

}  // namespace

TEST_CASE("interval representations carry identity maps on their support") {
  Representation r = interval(3, 1, 2);
  CHECK(dim_eq(r.dims, make_dim({1, 1, 0})));
  REQUIRE(r.maps.size() == 2);
  CHECK(r.maps[0].rows() == 1);
  CHECK(r.maps[0](0, 0) == Rat(1));
  CHECK(r.maps[1].rows() == 0);
}

TEST_CASE("hom dimensions between interval modules on the A2 path") {
  Quiver q = linear_quiver(2);
  CHECK(hom_dim(q, interval(2, 1, 2), interval(2, 1, 1)) == 1);
  CHECK(hom_dim(q, interval(2, 1, 1), interval(2, 1, 2)) == 0);
  CHECK(hom_dim(q, interval(2, 1, 2), interval(2, 2, 2)) == 0);
  CHECK(hom_dim(q, interval(2, 2, 2), interval(2, 1, 2)) == 1);
  CHECK(hom_dim(q, interval(2, 1, 2), interval(2, 1, 2)) == 1);
}

TEST_CASE("ext dimensions between interval modules on the A2 path") {
  Quiver q = linear_quiver(2);
  CHECK(ext_dim(q, interval(2, 1, 1), interval(2, 2, 2)) == 1);
  CHECK(ext_dim(q, interval(2, 2, 2), interval(2, 1, 1)) == 0);
  CHECK(ext_dim(q, interval(2, 1, 2), interval(2, 1, 2)) == 0);
}

TEST_CASE("hom and ext agree with the closed interval formulas") {
  const int n = 4;
  Quiver q = linear_quiver(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        for (int l = k; l <= n; ++l) {
          Interval s{i, j}, t{k, l};
          CAPTURE(i);
          CAPTURE(j);
          CAPTURE(k);
          CAPTURE(l);
          CHECK(hom_dim(q, interval_rep(n, s), interval_rep(n, t)) == an_hom_dim(n, s, t));
          CHECK(ext_dim(q, interval_rep(n, s), interval_rep(n, t)) == an_ext_dim(n, s, t));
        }
      }
    }
  }
}

TEST_CASE("random representations are deterministic in the seed") {
  Quiver q = fixture("e6t");
  DimVector d = null_root(q);
  Representation a = random_rep(q, d, 42);
  Representation b = random_rep(q, d, 42);
  Representation c = random_rep(q, d, 43);
  REQUIRE(a.maps.size() == b.maps.size());
  bool equal = true, equal_c = true;
  for (std::size_t i = 0; i < a.maps.size(); ++i) {
    for (Eigen::Index r = 0; r < a.maps[i].rows(); ++r) {
      for (Eigen::Index s = 0; s < a.maps[i].cols(); ++s) {
        equal = equal && a.maps[i](r, s) == b.maps[i](r, s);
        equal_c = equal_c && a.maps[i](r, s) == c.maps[i](r, s);
        Rat x = a.maps[i](r, s);
        CHECK(x >= Rat(-10));
        CHECK(x <= Rat(10));
      }
    }
  }
  CHECK(equal);
  CHECK_FALSE(equal_c);
}

TEST_CASE("endomorphism count of a square is four") {
  Quiver q = linear_quiver(2);
  Representation v;
  v.dims = make_dim({2, 0});
  v.maps.push_back(DenseMat<Rat>(0, 2));
  CHECK(hom_dim(q, v, v) == 4);
  CHECK_FALSE(is_schurian(q, v));
  CHECK(is_schurian(q, interval(2, 1, 1)));
  CHECK(is_schurian(q, interval(2, 1, 2)));
}

TEST_CASE("ext is nonnegative on random pairs") {
  std::mt19937 gen(5);
  Quiver a3 = linear_quiver(3);
  for (int t = 0; t < 300; ++t) {
    Representation u = random_rep(a3, random_dims(gen, 3, 2), gen());
    Representation w = random_rep(a3, random_dims(gen, 3, 2), gen());
    CHECK(ext_dim(a3, u, w) >= 0);
  }
  Quiver e6 = fixture("e6t");
  for (int t = 0; t < 50; ++t) {
    Representation u = random_rep(e6, random_dims(gen, 7, 2), gen());
    Representation w = random_rep(e6, random_dims(gen, 7, 2), gen());
    CHECK(ext_dim(e6, u, w) >= 0);
  }
}

TEST_CASE("ext needs an acyclic quiver") {
  Quiver cyc(2, {{0, 1}, {1, 0}});
  Representation v = random_rep(cyc, make_dim({1, 1}), 1);
  CHECK_THROWS_AS(ext_dim(cyc, v, v), DomainError);
}

TEST_CASE("schofield pairing detects homomorphisms in the euler-zero case") {
  Quiver q = linear_quiver(2);
  // <(1,1),(0,1)> = 0 and Hom = 0: the pairing must not vanish
  CHECK(schofield_pairing(q, interval(2, 1, 2), interval(2, 2, 2)) != Rat(0));
  CHECK(schofield_pairing(q, interval(2, 2, 2), interval(2, 1, 1)) != Rat(0));
  // euler form nonzero: undefined
  CHECK_THROWS_AS(schofield_pairing(q, interval(2, 1, 1), interval(2, 2, 2)), DomainError);

  // two copies of the same homogeneous class share homomorphisms
  Quiver k = fixture("kronecker");
  Representation v = random_rep(k, make_dim({1, 1}), 9);
  CHECK(schofield_pairing(k, v, v) == Rat(0));
}

TEST_CASE("schofield pairing vanishes exactly on pairs with homomorphisms") {
  Quiver q = fixture("e6t");
  DimVector d = null_root(q);
  for (std::uint64_t s = 0; s < 8; ++s) {
    Representation v = random_rep(q, d, 100 + s);
    Representation w = random_rep(q, d, 200 + s);
    bool nonzero = schofield_pairing(q, v, w) != Rat(0);
    CHECK(nonzero == (hom_dim(q, v, w) == 0));
  }
}

TEST_CASE("schurian sampling finds rigid representations and gives up honestly") {
  Quiver q = fixture("e6t");
  DimVector e8 = make_dim({1, 1, 1, 1, 1, 1, 2});
  Representation v = sample_schurian(q, e8, 1);
  CHECK(is_schurian(q, v));
  CHECK(dim_eq(v.dims, e8));

  // 2x a real root is never Schurian
  Quiver k = fixture("kronecker");
  CHECK_THROWS_AS(sample_schurian(k, make_dim({2, 0}), 1), DomainError);
}

TEST_CASE("right perpendicular membership") {
  Quiver q = linear_quiver(2);
  CHECK(in_right_perp(q, interval(2, 1, 2), interval(2, 2, 2)));
  CHECK_FALSE(in_right_perp(q, interval(2, 1, 2), interval(2, 1, 1)));  // hom
  CHECK_FALSE(in_right_perp(q, interval(2, 1, 1), interval(2, 2, 2)));  // ext
}

TEST_CASE("hom rejects mismatched shapes") {
  Quiver q = linear_quiver(2);
  Representation v = interval(2, 1, 1);
  Representation bad = v;
  bad.dims = make_dim({1, 1, 1});
  CHECK_THROWS_AS(hom_dim(q, v, bad), InputError);
}
