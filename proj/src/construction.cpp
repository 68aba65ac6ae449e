#include "radio/construction.hpp"

#include <string>

namespace radio {

namespace {

std::int64_t square(CycleOrder n) {
  return static_cast<std::int64_t>(n.value()) * n.value();
}

void check_index(CycleOrder n, std::int64_t i) {
  if (i < 0 || i >= square(n)) {
    throw std::domain_error("position index " + std::to_string(i) +
                            " outside [0, n^2)");
  }
}

void require_even_case(CycleOrder n) {
  if (!n.is_even() || n.value() < 4) {
    throw UnsupportedOrderError(
        "even-order construction requires n = 2k with k >= 2, got n = " +
        std::to_string(n.value()));
  }
}

void require_odd_k_odd_case(CycleOrder n) {
  if (n.is_even() || n.half() % 2 == 0) {
    throw UnsupportedOrderError(
        "odd-order construction for odd k requires n = 2k+1 with k odd, "
        "got n = " +
        std::to_string(n.value()));
  }
}

void require_odd_k_even_case(CycleOrder n) {
  if (n.is_even() || n.half() % 2 != 0 || n.half() < 2) {
    throw UnsupportedOrderError(
        "odd-order construction for even k requires n = 2k+1 with even "
        "k >= 2, got n = " +
        std::to_string(n.value()));
  }
}

// Forward pass of the recursive position function for n = 2k+1, k even.
// Index ranges: [0, 2n) walks D_0 u D_1, [2n, (n-1)n] shifts earlier values
// onto later diagonal pairs, and ((n-1)n, n^2) fills D_{n-1}.
std::vector<TorusVertex> case2_positions(CycleOrder n, std::int64_t upto) {
  const int m = n.value();
  const int k = n.half();
  const std::int64_t two_n = 2 * m;
  const std::int64_t last_start = static_cast<std::int64_t>(m - 1) * m;

  std::vector<TorusVertex> p(static_cast<std::size_t>(upto) + 1);
  p[0] = TorusVertex{0, 0};
  if (upto >= 1) p[1] = reduce_vertex(n, k + 1, k);
  for (std::int64_t i = 2; i <= upto; ++i) {
    TorusVertex prev;
    int da = 0;
    int db = 0;
    if (i < two_n) {
      prev = p[static_cast<std::size_t>(i - 2)];
      da = k / 2;
      db = k / 2;
    } else if (i <= last_start) {
      prev = p[static_cast<std::size_t>(i - two_n)];
      da = k + 2;
      db = k;
    } else {
      // p(i) extends p(i-1); decompose i-1 = (n-1)n + 4j + r.
      const std::int64_t t = (i - 1) - last_start;
      const std::int64_t j = t / 4;
      const int r = static_cast<int>(t % 4);
      prev = p[static_cast<std::size_t>(i - 1)];
      da = (r == 0 || r == 2) ? k - static_cast<int>(j)
                              : k / 2 + 1 + static_cast<int>(j);
      db = da;
    }
    p[static_cast<std::size_t>(i)] =
        reduce_vertex(n, prev.a + da, prev.b + db);
  }
  return p;
}

std::vector<std::int64_t> case2_labels(CycleOrder n, std::int64_t upto) {
  const int m = n.value();
  const int k = n.half();
  const std::int64_t last_start = static_cast<std::int64_t>(m - 1) * m;

  std::vector<std::int64_t> c(static_cast<std::size_t>(upto) + 1);
  c[0] = 1;
  for (std::int64_t i = 0; i < upto; ++i) {
    std::int64_t step;
    if (i < last_start) {
      step = (i % 2 == 0) ? 1 : k;
    } else {
      const std::int64_t t = i - last_start;
      const std::int64_t j = t / 4;
      const int r = static_cast<int>(t % 4);
      step = (r == 0 || r == 2) ? 2 * j + 1 : k - 2 * j;
    }
    c[static_cast<std::size_t>(i) + 1] = c[static_cast<std::size_t>(i)] + step;
  }
  return c;
}

OrderedLabeling assemble(CycleOrder n, std::vector<TorusVertex> order,
                         const std::vector<std::int64_t>& by_rank) {
  std::vector<std::int64_t> by_id(static_cast<std::size_t>(square(n)), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    by_id[static_cast<std::size_t>(vertex_id(n, order[i]))] = by_rank[i];
  }
  // A position collision would leave some vertex at 0, which the Labeling
  // constructor rejects.
  return OrderedLabeling{n, std::move(order), Labeling(std::move(by_id))};
}

}  // namespace

ParityCase parity_case(CycleOrder n) {
  if (n.value() == 1) return ParityCase::TrivialOne;
  if (n.value() == 2) {
    throw UnsupportedOrderError(
        "n = 2 is not a simple cycle; no labeling construction applies");
  }
  if (n.is_even()) return ParityCase::Even;
  return (n.half() % 2 == 1) ? ParityCase::OddKOdd : ParityCase::OddKEven;
}

TorusVertex position_even(CycleOrder n, std::int64_t i) {
  require_even_case(n);
  check_index(n, i);
  const std::int64_t k = n.half();
  const std::int64_t r = i / (2 * n.value());
  const std::int64_t s = (i / 4) % k;
  switch (i % 4) {
    case 0:
      return reduce_vertex(n, r, k * r + s);
    case 1:
      return reduce_vertex(n, r + k, k * r + s + k);
    case 2:
      return reduce_vertex(n, r, k * r + s + k);
    default:
      return reduce_vertex(n, r + k, k * r + s);
  }
}

std::int64_t label_even(CycleOrder n, std::int64_t i) {
  require_even_case(n);
  check_index(n, i);
  const std::int64_t k = n.half();
  return (i % 2 == 0) ? 1 + i / 2 * (k + 2) : 2 + (i - 1) / 2 * (k + 2);
}

TorusVertex position_odd_k_odd(CycleOrder n, std::int64_t i) {
  require_odd_k_odd_case(n);
  check_index(n, i);
  const std::int64_t k = n.half();
  const std::int64_t r = i / n.value();
  return reduce_vertex(n, i * k, r + i * ((k + 1) / 2));
}

std::int64_t label_odd_k_odd(CycleOrder n, std::int64_t i) {
  require_odd_k_odd_case(n);
  check_index(n, i);
  const std::int64_t k = n.half();
  return 1 + i * ((k + 1) / 2);
}

TorusVertex position_odd_k_even(CycleOrder n, std::int64_t i) {
  require_odd_k_even_case(n);
  check_index(n, i);
  return case2_positions(n, i).back();
}

std::int64_t label_odd_k_even(CycleOrder n, std::int64_t i) {
  require_odd_k_even_case(n);
  check_index(n, i);
  return case2_labels(n, i).back();
}

OrderedLabeling build_labeling(CycleOrder n) {
  const std::int64_t count = square(n);
  std::vector<TorusVertex> order;
  std::vector<std::int64_t> by_rank;
  order.reserve(static_cast<std::size_t>(count));
  by_rank.reserve(static_cast<std::size_t>(count));

  switch (parity_case(n)) {
    case ParityCase::TrivialOne:
      order.push_back(TorusVertex{0, 0});
      by_rank.push_back(1);
      break;
    case ParityCase::Even:
      for (std::int64_t i = 0; i < count; ++i) {
        order.push_back(position_even(n, i));
        by_rank.push_back(label_even(n, i));
      }
      break;
    case ParityCase::OddKOdd:
      for (std::int64_t i = 0; i < count; ++i) {
        order.push_back(position_odd_k_odd(n, i));
        by_rank.push_back(label_odd_k_odd(n, i));
      }
      break;
    case ParityCase::OddKEven:
      order = case2_positions(n, count - 1);
      by_rank = case2_labels(n, count - 1);
      break;
  }
  return assemble(n, std::move(order), by_rank);
}

std::int64_t rn_formula(CycleOrder n) {
  if (n.value() == 1) return 1;
  if (n.value() == 2) {
    throw UnsupportedOrderError("the radio number of C_2 [] C_2 is not "
                                "covered; n = 2 is not a simple cycle");
  }
  const std::int64_t k = n.half();
  const std::int64_t sq = square(n);
  return n.is_even() ? (sq - 2) / 2 * (k + 2) + 2 : (sq - 1) / 2 * (k + 1) + 1;
}

std::int64_t min_gap(CycleOrder n) {
  if (n.value() < 3) {
    throw UnsupportedOrderError("label gap bound requires n >= 3, got n = " +
                                std::to_string(n.value()));
  }
  return n.is_even() ? n.half() + 2 : n.half() + 1;
}

std::int64_t lower_bound(CycleOrder n) {
  if (n.value() == 1) return 1;
  const std::int64_t gap = min_gap(n);  // rejects n == 2
  const std::int64_t i = square(n);
  return (i % 2 == 1) ? 1 + (i - 1) / 2 * gap : 2 + (i - 2) / 2 * gap;
}

}  // namespace radio
