#include "omegalie/ga15.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace omegalie {

Perm5::Perm5() : images_{1, 2, 3, 4, 5} {}

Perm5::Perm5(const std::array<int, 5>& images) {
  std::array<bool, 5> seen{};
  for (std::size_t i = 0; i < 5; ++i) {
    int x = images[i];
    if (x < 1 || x > 5 || seen[x - 1])
      throw std::invalid_argument("Perm5: images must be a permutation of 1..5");
    seen[x - 1] = true;
    images_[i] = static_cast<std::uint8_t>(x);
  }
}

Perm5 Perm5::from_cycles(const std::vector<std::vector<int>>& cycles) {
  Perm5 result;
  for (const auto& cycle : cycles) {
    std::array<int, 5> img{1, 2, 3, 4, 5};
    std::array<bool, 5> used{};
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      if (from < 1 || from > 5 || used[from - 1])
        throw std::invalid_argument("Perm5: malformed cycle");
      used[from - 1] = true;
      img[from - 1] = cycle[(i + 1) % cycle.size()];
    }
    result = compose(result, Perm5(img));
  }
  return result;
}

Perm5 compose(const Perm5& p, const Perm5& q) {
  std::array<int, 5> img{};
  for (int i = 1; i <= 5; ++i)
    img[i - 1] = q(p(i));
  return Perm5(img);
}

Perm5 inverse(const Perm5& p) {
  std::array<int, 5> img{};
  for (int i = 1; i <= 5; ++i)
    img[p(i) - 1] = i;
  return Perm5(img);
}

Perm5 power(const Perm5& p, int k) {
  if (k < 0)
    throw std::invalid_argument("Perm5 power: negative exponent");
  Perm5 r;
  for (int i = 0; i < k; ++i)
    r = compose(r, p);
  return r;
}

std::string to_cycle_string(const Perm5& p) {
  std::ostringstream os;
  std::array<bool, 5> done{};
  bool any = false;
  for (int start = 1; start <= 5; ++start) {
    if (done[start - 1] || p(start) == start)
      continue;
    any = true;
    os << '(' << start;
    done[start - 1] = true;
    for (int x = p(start); x != start; x = p(x)) {
      os << ' ' << x;
      done[x - 1] = true;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

Perm5 parse_cycle_string(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && text[pos] == ' ')
      ++pos;
  };
  skip_space();
  if (pos == text.size())
    throw std::invalid_argument("empty permutation text");
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in permutation: " + std::string(text));
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size())
        throw std::invalid_argument("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] < '1' || text[pos] > '5')
        throw std::invalid_argument("cycle points must be 1..5: " + std::string(text));
      cycle.push_back(text[pos] - '0');
      ++pos;
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Perm5::from_cycles(cycles);
}

Perm5 sigma() { return Perm5::from_cycles({{1, 2, 3, 4, 5}}); }
Perm5 tau() { return Perm5::from_cycles({{2, 4, 5, 3}}); }

PermSet generate(std::span<const Perm5> gens) {
  if (gens.empty())
    throw std::invalid_argument("generate: empty generator set");
  PermSet group{Perm5{}};
  std::deque<Perm5> frontier{Perm5{}};
  while (!frontier.empty()) {
    Perm5 g = frontier.front();
    frontier.pop_front();
    for (const auto& s : gens) {
      Perm5 h = compose(g, s);
      if (group.insert(h).second)
        frontier.push_back(h);
    }
  }
  return group;
}

std::vector<Perm5> ga15_rows() {
  std::vector<Perm5> rows;
  rows.reserve(20);
  const Perm5 s = sigma();
  const Perm5 t = tau();
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 5; ++k)
      rows.push_back(compose(power(s, k), power(t, j)));
  return rows;
}

bool is_closed(const PermSet& set) {
  if (!set.contains(Perm5{}))
    return false;
  for (const auto& p : set) {
    if (!set.contains(inverse(p)))
      return false;
    for (const auto& q : set)
      if (!set.contains(compose(p, q)))
        return false;
  }
  return true;
}

bool is_normal(const PermSet& sub, const PermSet& group) {
  for (const auto& g : group) {
    const Perm5 g_inv = inverse(g);
    for (const auto& s : sub)
      if (!sub.contains(compose(compose(g, s), g_inv)))
        return false;
  }
  return true;
}

AffineMap5 AffineMap5::make(int a, int b) {
  if (a < 1 || a > 4 || b < 0 || b > 4)
    throw std::invalid_argument("AffineMap5: need a in 1..4 and b in 0..4");
  return {a, b};
}

AffineMap5 affine_compose(const AffineMap5& m1, const AffineMap5& m2) {
  return {(m1.a * m2.a) % 5, (m1.b + m1.a * m2.b) % 5};
}

AffineMap5 affine_inverse(const AffineMap5& m) {
  int inv = 1;
  while ((m.a * inv) % 5 != 1)
    ++inv;
  return {inv, ((-inv * m.b) % 5 + 5) % 5};
}

std::vector<AffineMap5> affine_group() {
  std::vector<AffineMap5> maps;
  for (int a = 1; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      maps.push_back({a, b});
  return maps;
}

Perm5 affine_to_perm(const AffineMap5& m) {
  std::array<int, 5> img{};
  for (int point = 1; point <= 5; ++point) {
    int r = m(point % 5);
    img[point - 1] = r == 0 ? 5 : r;
  }
  return Perm5(img);
}

} // namespace omegalie
