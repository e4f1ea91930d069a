#include "localh/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "localh/errors.hpp"

namespace localh {

namespace {

constexpr int kMaxRank = 63;

void require_rank(int n, int min, char family) {
  if (n < min || n > kMaxRank)
    throw std::invalid_argument(std::string("type ") + family + " needs rank in [" +
                                std::to_string(min) + ", " + std::to_string(kMaxRank) +
                                "], got " + std::to_string(n));
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

// Maximal runs of consecutive set bits in mask restricted to bits [lo, hi].
template <typename F>
void for_each_run(VertexMask mask, int lo, int hi, F&& f) {
  int start = -1;
  for (int v = lo; v <= hi + 1; ++v) {
    const bool in = v <= hi && ((mask >> (v - 1)) & 1U);
    if (in && start < 0) start = v;
    if (!in && start >= 0) {
      f(start, v - 1);
      start = -1;
    }
  }
}

}  // namespace

CartanType CartanType::A(int n) {
  require_rank(n, 1, 'A');
  return {Family::A, n, 0};
}

CartanType CartanType::B(int n) {
  require_rank(n, 2, 'B');
  return {Family::B, n, 0};
}

CartanType CartanType::D(int n) {
  require_rank(n, 2, 'D');
  return {Family::D, n, 0};
}

CartanType CartanType::E(int n) {
  if (n < 6 || n > 8) throw std::invalid_argument("type E needs rank 6, 7 or 8");
  return {Family::E, n, 0};
}

CartanType CartanType::F4() { return {Family::F, 4, 0}; }

CartanType CartanType::H(int n) {
  if (n != 3 && n != 4) throw std::invalid_argument("type H needs rank 3 or 4");
  return {Family::H, n, 0};
}

CartanType CartanType::I2(int m) {
  if (m < 3) throw std::invalid_argument("type I2(m) needs m >= 3");
  return {Family::I2, 2, m};
}

bool CartanType::is_classical() const {
  return family_ == Family::A || family_ == Family::B || family_ == Family::D;
}

std::string CartanType::name() const {
  switch (family_) {
    case Family::A: return "A" + std::to_string(rank_);
    case Family::B: return "B" + std::to_string(rank_);
    case Family::D: return "D" + std::to_string(rank_);
    case Family::E: return "E" + std::to_string(rank_);
    case Family::F: return "F" + std::to_string(rank_);
    case Family::H: return "H" + std::to_string(rank_);
    case Family::I2: return "I2(" + std::to_string(param_) + ")";
  }
  return "?";
}

CartanType parse_cartan_type(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (s.size() < 2) throw std::invalid_argument("unrecognized Cartan type '" + std::string(text) + "'");
  const std::string_view rest = std::string_view(s).substr(1);
  switch (s[0]) {
    case 'A': return CartanType::A(parse_int(rest));
    case 'B': return CartanType::B(parse_int(rest));
    case 'D': return CartanType::D(parse_int(rest));
    case 'E': return CartanType::E(parse_int(rest));
    case 'H': return CartanType::H(parse_int(rest));
    case 'F':
      if (rest == "4") return CartanType::F4();
      break;
    case 'I':
      if (rest.size() > 3 && rest.substr(0, 2) == "2(" && rest.back() == ')')
        return CartanType::I2(parse_int(rest.substr(2, rest.size() - 3)));
      break;
    default: break;
  }
  throw std::invalid_argument("unrecognized Cartan type '" + std::string(text) + "'");
}

bool DynkinDiagram::adjacent(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::find(edges.begin(), edges.end(), std::pair{i, j}) != edges.end();
}

DynkinDiagram dynkin_diagram(const CartanType& t) {
  if (!t.is_classical())
    throw std::invalid_argument("no Dynkin diagram model for exceptional type " + t.name());
  const int n = t.rank();
  DynkinDiagram d{n, {}};
  if (t.family() == Family::D) {
    for (int i = 1; i <= n - 3; ++i) d.edges.emplace_back(i, i + 1);
    if (n >= 3) {
      d.edges.emplace_back(n - 2, n - 1);
      d.edges.emplace_back(n - 2, n);
    }
  } else {
    for (int i = 1; i < n; ++i) d.edges.emplace_back(i, i + 1);
  }
  return d;
}

int ParabolicDecomposition::total_rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank();
  return r;
}

ParabolicDecomposition parabolic_decompose(const CartanType& t, VertexMask subset) {
  if (!t.is_classical())
    throw std::invalid_argument("parabolic decomposition needs a classical type, got " + t.name());
  const int n = t.rank();
  if (n < 64 && (subset >> n) != 0)
    throw std::invalid_argument("vertex subset is not contained in {1.." + std::to_string(n) + "}");

  ParabolicDecomposition d;
  auto add = [&](Family f, int size) {
    if (f == Family::B && size < 2) f = Family::A;
    if (f == Family::D && size <= 3) {
      if (size == 3) d.components.push_back(CartanType::A(3));
      else
        for (int i = 0; i < size; ++i) d.components.push_back(CartanType::A(1));
      return;
    }
    switch (f) {
      case Family::A: d.components.push_back(CartanType::A(size)); break;
      case Family::B: d.components.push_back(CartanType::B(size)); break;
      default: d.components.push_back(CartanType::D(size)); break;
    }
  };

  switch (t.family()) {
    case Family::A:
      for_each_run(subset, 1, n, [&](int a, int b) { add(Family::A, b - a + 1); });
      break;
    case Family::B:
      for_each_run(subset, 1, n,
                   [&](int a, int b) { add(b == n ? Family::B : Family::A, b - a + 1); });
      break;
    case Family::D: {
      const bool has_left = (subset >> (n - 2)) & 1U;   // vertex n-1
      const bool has_right = (subset >> (n - 1)) & 1U;  // vertex n
      const int leaves = int(has_left) + int(has_right);
      const bool has_fork = n >= 3 && ((subset >> (n - 3)) & 1U);  // vertex n-2
      for_each_run(subset, 1, n - 2, [&](int a, int b) {
        const int size = b - a + 1;
        if (b != n - 2) add(Family::A, size);
        else if (leaves == 2) add(Family::D, size + 2);
        else add(Family::A, size + leaves);
      });
      if (!has_fork)
        for (int i = 0; i < leaves; ++i) add(Family::A, 1);
      break;
    }
    default: break;
  }
  std::sort(d.components.begin(), d.components.end());
  return d;
}

ParabolicDecomposition parabolic_decompose(const CartanType& t, std::span<const int> subset) {
  VertexMask mask = 0;
  for (int v : subset) {
    if (v < 1 || v > t.rank())
      throw std::invalid_argument("vertex " + std::to_string(v) + " is not in {1.." +
                                  std::to_string(t.rank()) + "}");
    mask |= VertexMask{1} << (v - 1);
  }
  return parabolic_decompose(t, mask);
}

IntPoly h_plus(const CartanType& t) {
  if (!t.is_classical())
    throw std::invalid_argument("h-polynomial of the positive cluster complex is only modelled "
                                "for classical types, got " + t.name());
  const int n = t.rank();
  std::vector<Integer> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    Integer c;
    switch (t.family()) {
      case Family::A: {
        const Integer num = binomial(n, i) * binomial(n - 1, i);
        if (num % (i + 1) != 0) throw ConsistencyError("h_plus(A): inexact division");
        c = num / (i + 1);
        break;
      }
      case Family::B: c = binomial(n, i) * binomial(n - 1, i); break;
      default:
        c = binomial(n, i) * binomial(n - 2, i) + binomial(n - 2, i - 2) * binomial(n - 1, i);
        break;
    }
    v[static_cast<std::size_t>(i)] = std::move(c);
  }
  return IntPoly(std::move(v));
}

IntPoly h_plus(const ParabolicDecomposition& d) {
  IntPoly out = IntPoly::constant(1);
  for (const auto& c : d.components) out *= h_plus(c);
  return out;
}

}  // namespace localh
