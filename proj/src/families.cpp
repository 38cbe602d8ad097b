#include "itg/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "itg/error.hpp"

namespace itg {

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

Graph make(long long n, const Pairs& pairs) {
  return Graph::from_edges(static_cast<std::size_t>(n), std::span<const std::pair<Vertex, Vertex>>(pairs));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

Pairs path_pairs(long long n) {
  Pairs p;
  for (long long i = 0; i + 1 < n; ++i) p.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return p;
}

}  // namespace

Graph build_f1(long long k) {
  require(k >= 0, "F1^k requires k >= 0");
  return make(k + 2, path_pairs(k + 2));
}

Graph build_f2(long long k) {
  require(k >= 2, "F2^k requires k >= 2");
  Pairs p = path_pairs(k + 3);
  p.emplace_back(0, 2);
  return make(k + 3, p);
}

Graph build_f3(long long k) {
  require(k >= 2, "F3^k requires k >= 2");
  Pairs p = path_pairs(k + 3);
  p.emplace_back(0, 2);
  p.emplace_back(static_cast<Vertex>(k), static_cast<Vertex>(k + 2));
  return make(k + 3, p);
}

Graph build_f4(long long k) {
  require(k >= 3, "F4^k requires k >= 3");
  const auto last = static_cast<Vertex>(k - 2);
  Pairs p = path_pairs(k - 1);
  const auto first_pendant = static_cast<Vertex>(k - 1);
  p.emplace_back(0, first_pendant);
  p.emplace_back(0, first_pendant + 1);
  p.emplace_back(last, first_pendant + 2);
  p.emplace_back(last, first_pendant + 3);
  return make(k + 3, p);
}

Graph build_f5(long long k) {
  require(k >= 1, "F5^k requires k >= 1");
  Pairs p = path_pairs(k + 1);
  const auto tip = static_cast<Vertex>(k);
  p.emplace_back(tip, tip + 1);
  p.emplace_back(tip, tip + 2);
  return make(k + 3, p);
}

Graph build_lollipop(long long n, long long g) {
  require(g >= 3, "Lol_{n,g} requires g >= 3");
  require(n >= g, "Lol_{n,g} requires n >= g");
  Pairs p;
  for (long long i = 0; i < g; ++i) p.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % g));
  for (long long i = g; i < n; ++i) p.emplace_back(static_cast<Vertex>(i == g ? 0 : i - 1), static_cast<Vertex>(i));
  return make(n, p);
}

Graph build_path(long long n) {
  require(n >= 1, "P_n requires n >= 1");
  return make(n, path_pairs(n));
}

Graph build_cycle(long long n) {
  require(n >= 3, "C_n requires n >= 3");
  Pairs p = path_pairs(n);
  p.emplace_back(0, static_cast<Vertex>(n - 1));
  return make(n, p);
}

Graph build_complete(long long n) {
  require(n >= 1, "K_n requires n >= 1");
  Pairs p;
  for (long long u = 0; u < n; ++u)
    for (long long v = u + 1; v < n; ++v) p.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return make(n, p);
}

Graph build_star(long long n) {
  require(n >= 1, "S_n requires n >= 1");
  Pairs p;
  for (long long v = 1; v < n; ++v) p.emplace_back(0, static_cast<Vertex>(v));
  return make(n, p);
}

Graph build_complete_bipartite(long long a, long long b) {
  require(a >= 1 && b >= 1, "K_{a,b} requires a, b >= 1");
  Pairs p;
  for (long long u = 0; u < a; ++u)
    for (long long v = 0; v < b; ++v) p.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(a + v));
  return make(a + b, p);
}

Graph build_petersen() {
  std::vector<std::pair<int, int>> subsets;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) subsets.emplace_back(i, j);
  Pairs p;
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    for (std::size_t b = a + 1; b < subsets.size(); ++b) {
      auto [i, j] = subsets[a];
      auto [k, l] = subsets[b];
      if (i != k && i != l && j != k && j != l) p.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  return make(10, p);
}

Graph build_petersen_drawing() {
  Pairs p;
  for (Vertex i = 0; i < 5; ++i) {
    p.emplace_back(i, (i + 1) % 5);
    p.emplace_back(5 + i, 5 + (i + 2) % 5);
    p.emplace_back(i, 5 + i);
  }
  return make(10, p);
}

Graph build_shrikhande() {
  auto id = [](int x, int y) { return static_cast<Vertex>(((x + 4) % 4) * 4 + (y + 4) % 4); };
  const int steps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  Pairs p;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (const auto& s : steps) p.emplace_back(id(x, y), id(x + s[0], y + s[1]));
  return make(16, p);
}

Graph build_rook(long long side) {
  require(side >= 1, "rook graph requires side >= 1");
  Pairs p;
  auto id = [side](long long r, long long c) { return static_cast<Vertex>(r * side + c); };
  for (long long r = 0; r < side; ++r)
    for (long long c = 0; c < side; ++c)
      for (long long t = 0; t < side; ++t) {
        if (t > c) p.emplace_back(id(r, c), id(r, t));
        if (t > r) p.emplace_back(id(r, c), id(t, c));
      }
  return make(side * side, p);
}

Graph build_cube() {
  Pairs p;
  for (Vertex v = 0; v < 8; ++v)
    for (Vertex bit = 1; bit < 8; bit <<= 1)
      if (!(v & bit)) p.emplace_back(v, v | bit);
  return make(8, p);
}

Graph build_k4_minus_edge() { return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}); }

std::vector<std::string> named_graphs() {
  return {"petersen", "petersen-drawing", "shrikhande", "rook44", "cube", "k4-e"};
}

namespace {

std::vector<long long> parse_params(std::string_view text, std::string_view spec) {
  std::vector<long long> out;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw PreconditionError("bad family parameter '" + std::string(item) + "' in '" + std::string(spec) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

const std::map<std::string, FamilyKind, std::less<>>& kind_names() {
  static const std::map<std::string, FamilyKind, std::less<>> names = {
      {"f1", FamilyKind::kF1},   {"f2", FamilyKind::kF2},       {"f3", FamilyKind::kF3},
      {"f4", FamilyKind::kF4},   {"f5", FamilyKind::kF5},       {"lol", FamilyKind::kLollipop},
      {"p", FamilyKind::kPath},  {"c", FamilyKind::kCycle},     {"k", FamilyKind::kComplete},
      {"s", FamilyKind::kStar},
  };
  return names;
}

std::size_t arity(FamilyKind kind) { return kind == FamilyKind::kLollipop ? 2 : (kind == FamilyKind::kNamed ? 0 : 1); }

}  // namespace

PatternFamily parse_family(std::string_view spec) {
  PatternFamily family;
  const std::size_t colon = spec.find(':');
  std::string_view head = spec.substr(0, colon);
  if (colon == std::string_view::npos) {
    const auto names = named_graphs();
    if (std::find(names.begin(), names.end(), head) == names.end()) {
      throw PreconditionError("unknown family '" + std::string(spec) + "'");
    }
    family.kind = FamilyKind::kNamed;
    family.name = std::string(head);
    return family;
  }
  auto it = kind_names().find(head);
  if (it == kind_names().end()) throw PreconditionError("unknown family '" + std::string(head) + "'");
  family.kind = it->second;
  family.params = parse_params(spec.substr(colon + 1), spec);
  if (family.params.size() != arity(family.kind)) {
    throw PreconditionError("family '" + std::string(head) + "' takes " + std::to_string(arity(family.kind)) +
                            " parameter(s)");
  }
  return family;
}

Graph PatternFamily::build() const {
  switch (kind) {
    case FamilyKind::kF1: return build_f1(params.at(0));
    case FamilyKind::kF2: return build_f2(params.at(0));
    case FamilyKind::kF3: return build_f3(params.at(0));
    case FamilyKind::kF4: return build_f4(params.at(0));
    case FamilyKind::kF5: return build_f5(params.at(0));
    case FamilyKind::kLollipop: return build_lollipop(params.at(0), params.at(1));
    case FamilyKind::kPath: return build_path(params.at(0));
    case FamilyKind::kCycle: return build_cycle(params.at(0));
    case FamilyKind::kComplete: return build_complete(params.at(0));
    case FamilyKind::kStar: return build_star(params.at(0));
    case FamilyKind::kNamed:
      if (name == "petersen") return build_petersen();
      if (name == "petersen-drawing") return build_petersen_drawing();
      if (name == "shrikhande") return build_shrikhande();
      if (name == "rook44") return build_rook(4);
      if (name == "cube") return build_cube();
      if (name == "k4-e") return build_k4_minus_edge();
      break;
  }
  throw PreconditionError("unknown family '" + name + "'");
}

std::string PatternFamily::to_string() const {
  if (kind == FamilyKind::kNamed) return name;
  std::string head;
  for (const auto& [key, value] : kind_names())
    if (value == kind) head = key;
  std::string out = head + ":";
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
  return out;
}

}  // namespace itg
