#include "weave/bracket.hpp"

#include "weave/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <vector>

namespace weave {

namespace {

constexpr int kMaxCrossings = 62;

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { reset(); }

  void reset() { std::iota(parent.begin(), parent.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // true if a and b were in different sets
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }

  std::vector<std::uint32_t> parent;
};

// Endpoint graph of the closed diagram with all pass-through arcs contracted.
// Each crossing keeps four endpoint ids: top-left, top-right, bottom-left,
// bottom-right.
struct Diagram {
  struct Crossing {
    std::uint32_t tl, tr, bl, br;
    bool positive;
  };
  std::vector<Crossing> crossings;
  std::uint32_t endpoint_count = 0;
  int free_loops = 0;  // components that no crossing touches
};

Diagram build_diagram(const BraidWord& b) {
  const int k = b.strands();
  const int c = static_cast<int>(b.length());
  const int levels = std::max(c, 1);
  auto node = [&](int level, int x) {
    return static_cast<std::uint32_t>((level % levels) * k + x);
  };

  UnionFind base(static_cast<std::size_t>(levels) * k);
  for (int j = 0; j < c; ++j) {
    const int i = std::abs(b.letters()[j]) - 1;
    for (int x = 0; x < k; ++x)
      if (x != i && x != i + 1) base.unite(node(j, x), node(j + 1, x));
  }
  if (c == 0) {
    Diagram d;
    d.free_loops = k;
    return d;
  }

  Diagram d;
  std::vector<std::int64_t> compact(base.parent.size(), -1);
  auto id = [&](std::uint32_t n) {
    auto r = base.find(n);
    if (compact[r] < 0) compact[r] = d.endpoint_count++;
    return static_cast<std::uint32_t>(compact[r]);
  };
  for (int j = 0; j < c; ++j) {
    const int letter = b.letters()[j];
    const int i = std::abs(letter) - 1;
    d.crossings.push_back({id(node(j, i)), id(node(j, i + 1)), id(node(j + 1, i)),
                           id(node(j + 1, i + 1)), letter > 0});
  }
  std::vector<bool> root_seen(base.parent.size(), false);
  for (std::uint32_t n = 0; n < base.parent.size(); ++n) {
    auto r = base.find(n);
    if (root_seen[r]) continue;
    root_seen[r] = true;
    if (compact[r] < 0) ++d.free_loops;
  }
  return d;
}

// histogram[a * stride + loops] counts states with `a` A-smoothings.
void enumerate_range(const Diagram& d, std::uint64_t begin, std::uint64_t end,
                     std::size_t stride, std::vector<std::uint64_t>& histogram) {
  UnionFind uf(d.endpoint_count);
  for (std::uint64_t state = begin; state < end; ++state) {
    uf.reset();
    std::uint32_t merges = 0;
    for (std::size_t j = 0; j < d.crossings.size(); ++j) {
      const auto& x = d.crossings[j];
      const bool a_smoothing = (state >> j) & 1u;
      if (a_smoothing == x.positive) {
        merges += uf.unite(x.tl, x.bl);
        merges += uf.unite(x.tr, x.br);
      } else {
        merges += uf.unite(x.tl, x.tr);
        merges += uf.unite(x.bl, x.br);
      }
    }
    const auto loops = d.endpoint_count - merges + static_cast<std::uint32_t>(d.free_loops);
    const auto a = static_cast<std::size_t>(std::popcount(state));
    ++histogram[a * stride + loops];
  }
}

}  // namespace

std::uint64_t state_count(const BraidWord& b) {
  if (b.length() > kMaxCrossings) return UINT64_MAX;
  return std::uint64_t{1} << b.length();
}

StateSumResult state_sum(const BraidWord& b, const OracleOptions& options) {
  const std::uint64_t states = state_count(b);
  if (b.length() > kMaxCrossings || states > options.state_budget)
    throw TooLarge("state sum over " + std::to_string(b.length()) + " crossings exceeds budget of " +
                   std::to_string(options.state_budget) + " states");

  const Diagram diagram = build_diagram(b);
  const std::size_t c = b.length();
  const std::size_t max_loops = diagram.endpoint_count + diagram.free_loops;
  const std::size_t stride = max_loops + 1;

  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, workers);
  if (states < 4096) workers = 1;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, states));

  std::vector<std::vector<std::uint64_t>> partial(workers,
                                                  std::vector<std::uint64_t>((c + 1) * stride, 0));
  if (workers == 1) {
    enumerate_range(diagram, 0, states, stride, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = states / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = w + 1 == workers ? states : lo + chunk;
      pool.emplace_back([&, lo, hi, w] { enumerate_range(diagram, lo, hi, stride, partial[w]); });
    }
  }

  std::vector<std::uint64_t> histogram((c + 1) * stride, 0);
  for (const auto& part : partial)
    for (std::size_t idx = 0; idx < histogram.size(); ++idx) histogram[idx] += part[idx];

  // delta^m for m = 0 .. max_loops - 1
  const LaurentPoly delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  std::vector<LaurentPoly> delta_pow{LaurentPoly(1)};
  for (std::size_t m = 1; m < max_loops; ++m) delta_pow.push_back(delta_pow.back() * delta);

  StateSumResult result;
  for (std::size_t a = 0; a <= c; ++a) {
    LaurentPoly by_loops;
    for (std::size_t loops = 1; loops <= max_loops; ++loops) {
      const auto count = histogram[a * stride + loops];
      if (count == 0) continue;
      by_loops += LaurentPoly(BigInt(count)) * delta_pow[loops - 1];
    }
    const auto a_exponent = static_cast<LaurentPoly::Exponent>(2 * a) -
                            static_cast<LaurentPoly::Exponent>(c);
    result.bracket += LaurentPoly::monomial(1, a_exponent) * by_loops;
  }
  result.writhe = writhe(b);
  result.jones = normalize_bracket(result.bracket, result.writhe);
  return result;
}

LaurentPoly normalize_bracket(const LaurentPoly& bracket, int writhe) {
  LaurentPoly jones;
  const BigInt sign = writhe % 2 == 0 ? 1 : -1;
  for (const auto& [e, coeff] : bracket.terms()) {
    const auto a_exp = e - 3 * static_cast<LaurentPoly::Exponent>(writhe);
    if (a_exp % 2 != 0)
      throw InternalParityError("odd A-exponent " + std::to_string(a_exp) +
                                " after writhe normalization");
    jones += LaurentPoly::monomial(sign * coeff, -a_exp / 2);
  }
  return jones;
}

LaurentPoly kauffman_bracket(const BraidWord& b, const OracleOptions& options) {
  return state_sum(b, options).bracket;
}

LaurentPoly jones_via_bracket(const BraidWord& b, const OracleOptions& options) {
  return state_sum(b, options).jones;
}

}  // namespace weave
