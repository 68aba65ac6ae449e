#include <set>

#include "doctest.h"
#include "radio/construction.hpp"
#include "radio/labeling.hpp"
#include "radio/torus.hpp"

using radio::CycleOrder;
using radio::ParityCase;
using radio::TorusVertex;

namespace {

// Every order the constructions support, up to 25.
std::vector<int> supported_orders(int max_n) {
  std::vector<int> orders{1};
  for (int n = 3; n <= max_n; ++n) orders.push_back(n);
  return orders;
}

}  // namespace

TEST_CASE("parity case dispatch") {
  CHECK(radio::parity_case(CycleOrder(1)) == ParityCase::TrivialOne);
  CHECK(radio::parity_case(CycleOrder(4)) == ParityCase::Even);
  CHECK(radio::parity_case(CycleOrder(24)) == ParityCase::Even);
  CHECK(radio::parity_case(CycleOrder(3)) == ParityCase::OddKOdd);
  CHECK(radio::parity_case(CycleOrder(7)) == ParityCase::OddKOdd);
  CHECK(radio::parity_case(CycleOrder(5)) == ParityCase::OddKEven);
  CHECK(radio::parity_case(CycleOrder(9)) == ParityCase::OddKEven);
  CHECK_THROWS_AS(radio::parity_case(CycleOrder(2)),
                  radio::UnsupportedOrderError);
}

TEST_CASE("even-order position function") {
  const CycleOrder n(4);
  CHECK(radio::position_even(n, 0) == TorusVertex{0, 0});
  CHECK(radio::position_even(n, 1) == TorusVertex{2, 2});
  CHECK(radio::position_even(n, 4) == TorusVertex{0, 1});
  CHECK(radio::position_even(n, 15) == TorusVertex{3, 3});

  CHECK_THROWS_AS(radio::position_even(CycleOrder(5), 0),
                  radio::UnsupportedOrderError);
  CHECK_THROWS_AS(radio::position_even(CycleOrder(2), 0),
                  radio::UnsupportedOrderError);
  CHECK_THROWS_AS(radio::position_even(n, 16), std::domain_error);
  CHECK_THROWS_AS(radio::position_even(n, -1), std::domain_error);
}

TEST_CASE("even-order labels") {
  const CycleOrder n(4);
  CHECK(radio::label_even(n, 0) == 1);
  CHECK(radio::label_even(n, 3) == 6);
  CHECK(radio::label_even(n, 15) == 30);
}

TEST_CASE("odd-order position function, odd k") {
  const CycleOrder n(3);
  CHECK(radio::position_odd_k_odd(n, 0) == TorusVertex{0, 0});
  CHECK(radio::position_odd_k_odd(n, 3) == TorusVertex{0, 1});
  CHECK(radio::position_odd_k_odd(n, 8) == TorusVertex{2, 1});

  CHECK_THROWS_AS(radio::position_odd_k_odd(CycleOrder(5), 0),
                  radio::UnsupportedOrderError);
  CHECK_THROWS_AS(radio::position_odd_k_odd(CycleOrder(4), 0),
                  radio::UnsupportedOrderError);
}

TEST_CASE("odd-order labels, odd k") {
  CHECK(radio::label_odd_k_odd(CycleOrder(3), 0) == 1);
  CHECK(radio::label_odd_k_odd(CycleOrder(3), 8) == 9);
  CHECK(radio::label_odd_k_odd(CycleOrder(7), 48) == 97);
}

TEST_CASE("odd-order position function, even k") {
  const CycleOrder n(5);
  CHECK(radio::position_odd_k_even(n, 0) == TorusVertex{0, 0});
  CHECK(radio::position_odd_k_even(n, 1) == TorusVertex{3, 2});
  CHECK(radio::position_odd_k_even(n, 5) == TorusVertex{0, 4});
  CHECK(radio::position_odd_k_even(n, 20) == TorusVertex{3, 4});
  CHECK(radio::position_odd_k_even(n, 21) == TorusVertex{0, 1});
  CHECK(radio::position_odd_k_even(n, 24) == TorusVertex{1, 2});

  CHECK_THROWS_AS(radio::position_odd_k_even(CycleOrder(3), 0),
                  radio::UnsupportedOrderError);
  CHECK_THROWS_AS(radio::position_odd_k_even(CycleOrder(1), 0),
                  radio::UnsupportedOrderError);
  CHECK_THROWS_AS(radio::position_odd_k_even(CycleOrder(6), 0),
                  radio::UnsupportedOrderError);
}

TEST_CASE("odd-order labels, even k") {
  const CycleOrder n(5);
  CHECK(radio::label_odd_k_even(n, 0) == 1);
  CHECK(radio::label_odd_k_even(n, 20) == 31);
  CHECK(radio::label_odd_k_even(n, 24) == 37);
}

TEST_CASE("even-k labels step by k+1 over every second index") {
  for (int n_value : {5, 9, 13}) {
    const CycleOrder n(n_value);
    const std::int64_t count =
        static_cast<std::int64_t>(n_value) * n_value;
    for (std::int64_t i = 0; i + 2 < count; i += 2) {
      CHECK(radio::label_odd_k_even(n, i + 2) ==
            radio::label_odd_k_even(n, i) + n.half() + 1);
    }
  }
}

TEST_CASE("even-k positions respect the diagonal layout") {
  for (int n_value : {5, 9, 13}) {
    const CycleOrder n(n_value);
    const std::int64_t last_start =
        static_cast<std::int64_t>(n_value - 1) * n_value;
    const std::int64_t count = static_cast<std::int64_t>(n_value) * n_value;
    const auto built = radio::build_labeling(n);
    for (std::int64_t i = 0; i < count; ++i) {
      const int diag = radio::diagonal_of(n, built.order[static_cast<size_t>(i)]).index;
      if (i >= last_start) {
        CHECK(diag == n_value - 1);
      } else {
        const int band = 2 * static_cast<int>(i / (2 * n_value));
        CHECK((diag == band || diag == band + 1));
      }
    }
  }
}

TEST_CASE("build_labeling dispatch and spans") {
  const auto trivial = radio::build_labeling(CycleOrder(1));
  CHECK(trivial.order == std::vector<TorusVertex>{{0, 0}});
  CHECK(trivial.span() == 1);

  CHECK(radio::build_labeling(CycleOrder(3)).span() == 9);
  CHECK(radio::build_labeling(CycleOrder(6)).span() == 87);
  CHECK_THROWS_AS(radio::build_labeling(CycleOrder(2)),
                  radio::UnsupportedOrderError);
}

TEST_CASE("position functions are bijections and labels increase") {
  for (int n_value : supported_orders(25)) {
    const CycleOrder n(n_value);
    const auto built = radio::build_labeling(n);
    CHECK(built.order.size() ==
          static_cast<size_t>(n_value) * static_cast<size_t>(n_value));
    CHECK(std::set<TorusVertex>(built.order.begin(), built.order.end())
              .size() == built.order.size());
    for (size_t i = 1; i < built.order.size(); ++i) {
      CHECK(built.labeling.at(radio::vertex_id(n, built.order[i - 1])) <
            built.labeling.at(radio::vertex_id(n, built.order[i])));
    }
  }
}

TEST_CASE("constructions verify cleanly up to order 13") {
  for (int n_value : supported_orders(13)) {
    const CycleOrder n(n_value);
    CHECK(radio::verify_full(radio::build_labeling(n).labeling,
                             radio::TorusMetric{n})
              .valid());
  }
}

TEST_CASE("closed forms") {
  CHECK(radio::rn_formula(CycleOrder(1)) == 1);
  CHECK(radio::rn_formula(CycleOrder(3)) == 9);
  CHECK(radio::rn_formula(CycleOrder(4)) == 30);
  CHECK(radio::rn_formula(CycleOrder(5)) == 37);
  CHECK(radio::rn_formula(CycleOrder(6)) == 87);
  CHECK(radio::rn_formula(CycleOrder(7)) == 97);
  CHECK_THROWS_AS(radio::rn_formula(CycleOrder(2)),
                  radio::UnsupportedOrderError);

  CHECK(radio::min_gap(CycleOrder(3)) == 2);
  CHECK(radio::min_gap(CycleOrder(4)) == 4);
  CHECK(radio::min_gap(CycleOrder(5)) == 3);
  CHECK_THROWS_AS(radio::min_gap(CycleOrder(1)),
                  radio::UnsupportedOrderError);
  CHECK_THROWS_AS(radio::min_gap(CycleOrder(2)),
                  radio::UnsupportedOrderError);

  CHECK(radio::lower_bound(CycleOrder(1)) == 1);
  CHECK(radio::lower_bound(CycleOrder(4)) == 30);
  CHECK(radio::lower_bound(CycleOrder(7)) == 97);
}

TEST_CASE("span, lower bound, and closed form agree") {
  for (int n_value : supported_orders(25)) {
    const CycleOrder n(n_value);
    const std::int64_t rn = radio::rn_formula(n);
    CHECK(radio::lower_bound(n) == rn);
    CHECK(radio::build_labeling(n).span() == rn);
  }
}
