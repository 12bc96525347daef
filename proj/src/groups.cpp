#include "cgt/groups.hpp"

#include <algorithm>
#include <deque>

namespace cgt {

using nlohmann::json;

FiniteGroup FiniteGroup::from_generators(int degree, std::vector<Perm> generators,
                                         i64 order_bound, std::string name) {
  if (degree < 1) fail(ErrorKind::Input, "degree must be positive");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree)
      fail(ErrorKind::Input, "generator degree mismatch");
    if (!perm_is_valid(g)) fail(ErrorKind::Input, "generator is not a bijection");
  }

  FiniteGroup G;
  G.degree = degree;
  G.name = std::move(name);
  G.generators = std::move(generators);

  // Breadth-first closure, identity first; layer order with generators
  // applied in the order given keeps the numbering deterministic.
  G.elements.push_back(perm_identity(degree));
  G.index_.emplace(G.elements[0], 0);
  G.bfs_parent_.push_back(-1);
  G.bfs_via_.push_back(-1);
  G.right_action_.assign(G.generators.size(), {});

  Perm scratch;
  for (std::size_t head = 0; head < G.elements.size(); ++head) {
    for (std::size_t s = 0; s < G.generators.size(); ++s) {
      perm_mul_into(G.elements[head], G.generators[s], scratch);
      auto [it, inserted] = G.index_.emplace(scratch, static_cast<int>(G.elements.size()));
      if (inserted) {
        if (static_cast<i64>(G.elements.size()) >= order_bound)
          fail(ErrorKind::Bound, "group order exceeds bound " + std::to_string(order_bound));
        G.elements.push_back(scratch);
        G.bfs_parent_.push_back(static_cast<int>(head));
        G.bfs_via_.push_back(static_cast<int>(s));
      }
      G.right_action_[s].push_back(it->second);
      // right_action_[s][head] just filled; BFS visits heads in order.
    }
  }

  G.inverse_of_.resize(G.elements.size());
  for (std::size_t e = 0; e < G.elements.size(); ++e)
    G.inverse_of_[e] = G.index_of(perm_inv(G.elements[e]));
  return G;
}

int FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) fail(ErrorKind::Internal, "permutation not in group");
  return it->second;
}

int FiniteGroup::multiply(int a, int b) const {
  return index_of(perm_mul(elements[static_cast<std::size_t>(a)],
                           elements[static_cast<std::size_t>(b)]));
}

void FiniteGroup::product_row(int x, std::vector<int>& row) const {
  row.resize(elements.size());
  row[0] = x;
  for (std::size_t y = 1; y < elements.size(); ++y)
    row[y] = right_action_[static_cast<std::size_t>(bfs_via_[y])]
                          [static_cast<std::size_t>(row[static_cast<std::size_t>(bfs_parent_[y])])];
}

ConjugacyClassPartition conjugacy_classes(const FiniteGroup& G) {
  const std::size_t n = G.elements.size();
  ConjugacyClassPartition part;
  part.class_of.assign(n, -1);

  std::vector<Perm> gen_inverses;
  gen_inverses.reserve(G.generators.size());
  for (const auto& s : G.generators) gen_inverses.push_back(perm_inv(s));

  std::deque<int> queue;
  Perm tmp, conj;
  for (std::size_t start = 0; start < n; ++start) {
    if (part.class_of[start] != -1) continue;
    const int cls = static_cast<int>(part.classes.size());
    part.classes.emplace_back();
    part.representatives.push_back(static_cast<int>(start));
    part.class_of[start] = cls;
    queue.clear();
    queue.push_back(static_cast<int>(start));
    while (!queue.empty()) {
      int e = queue.front();
      queue.pop_front();
      part.classes[static_cast<std::size_t>(cls)].push_back(e);
      for (std::size_t s = 0; s < G.generators.size(); ++s) {
        // s^-1 * e * s
        perm_mul_into(G.elements[static_cast<std::size_t>(e)], G.generators[s], tmp);
        perm_mul_into(gen_inverses[s], tmp, conj);
        int f = G.index_of(conj);
        if (part.class_of[static_cast<std::size_t>(f)] == -1) {
          part.class_of[static_cast<std::size_t>(f)] = cls;
          queue.push_back(f);
        }
      }
    }
    std::sort(part.classes[static_cast<std::size_t>(cls)].begin(),
              part.classes[static_cast<std::size_t>(cls)].end());
  }

  part.inverse_class.resize(part.classes.size());
  for (std::size_t c = 0; c < part.classes.size(); ++c)
    part.inverse_class[c] =
        part.class_of[static_cast<std::size_t>(G.inverse(part.representatives[c]))];
  return part;
}

std::vector<int> center_elements(const FiniteGroup& G) {
  std::vector<int> result;
  Perm gs, sg;
  for (std::size_t e = 0; e < G.elements.size(); ++e) {
    bool central = true;
    for (const auto& s : G.generators) {
      perm_mul_into(G.elements[e], s, gs);
      perm_mul_into(s, G.elements[e], sg);
      if (gs != sg) {
        central = false;
        break;
      }
    }
    if (central) result.push_back(static_cast<int>(e));
  }
  return result;
}

i64 group_exponent(const FiniteGroup& G) {
  i64 e = 1;
  for (std::size_t i = 0; i < G.elements.size(); ++i)
    e = lcm_i64(e, perm_order(G.elements[i]));
  return e;
}

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H, i64 order_bound) {
  const int degree = G.degree + H.degree;
  std::vector<Perm> gens;
  for (const auto& g : G.generators) {
    Perm p = perm_identity(degree);
    for (int x = 0; x < G.degree; ++x) p[x] = g[static_cast<std::size_t>(x)];
    gens.push_back(std::move(p));
  }
  for (const auto& h : H.generators) {
    Perm p = perm_identity(degree);
    for (int x = 0; x < H.degree; ++x)
      p[static_cast<std::size_t>(G.degree + x)] = G.degree + h[static_cast<std::size_t>(x)];
    gens.push_back(std::move(p));
  }
  if (G.order() > 0 && H.order() > order_bound / G.order())
    fail(ErrorKind::Bound, "product order exceeds bound");
  FiniteGroup P = FiniteGroup::from_generators(degree, std::move(gens), order_bound,
                                               G.name + "x" + H.name);
  P.spec = json{{"type", "product"}, {"factors", json::array({G.spec, H.spec})}};
  if (P.order() != G.order() * H.order())
    fail(ErrorKind::Internal, "direct product order mismatch");
  return P;
}

namespace {

FiniteGroup make_cyclic(i64 m, i64 bound) {
  if (m < 1) fail(ErrorKind::Input, "cyclic: m must be >= 1");
  if (m > bound) fail(ErrorKind::Bound, "cyclic: order exceeds bound");
  std::vector<Perm> gens;
  if (m > 1) {
    Perm rot(static_cast<std::size_t>(m));
    for (i64 x = 0; x < m; ++x) rot[static_cast<std::size_t>(x)] = static_cast<int>((x + 1) % m);
    gens.push_back(std::move(rot));
  }
  return FiniteGroup::from_generators(static_cast<int>(std::max<i64>(m, 1)), std::move(gens),
                                      bound, "cyclic" + std::to_string(m));
}

FiniteGroup make_klein4(i64 bound) {
  std::vector<Perm> gens = {perm_from_cycles(4, {{0, 1}}), perm_from_cycles(4, {{2, 3}})};
  return FiniteGroup::from_generators(4, std::move(gens), bound, "klein4");
}

FiniteGroup make_dihedral(i64 m, i64 bound) {
  if (m < 1) fail(ErrorKind::Input, "dihedral: m must be >= 1");
  if (2 * m > bound) fail(ErrorKind::Bound, "dihedral: order exceeds bound");
  // The m-gon action is faithful only for m >= 3.
  if (m == 1) {
    auto G = FiniteGroup::from_generators(2, {perm_from_cycles(2, {{0, 1}})}, bound, "dihedral1");
    return G;
  }
  if (m == 2) {
    auto G = make_klein4(bound);
    G.name = "dihedral2";
    return G;
  }
  const int n = static_cast<int>(m);
  Perm rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    rot[static_cast<std::size_t>(x)] = (x + 1) % n;
    refl[static_cast<std::size_t>(x)] = (n - x) % n;
  }
  return FiniteGroup::from_generators(n, {rot, refl}, bound, "dihedral" + std::to_string(m));
}

// Dicyclic of order 4m on 4m points: left regular representation of
// <a, b | a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1>.
// Points: i in [0,2m) is a^i, 2m+i is a^i b.
FiniteGroup make_dicyclic(i64 m, i64 bound) {
  if (m < 1) fail(ErrorKind::Input, "dicyclic: m must be >= 1");
  if (4 * m > bound) fail(ErrorKind::Bound, "dicyclic: order exceeds bound");
  const int M = static_cast<int>(m);
  const int n = 4 * M;
  const int half = 2 * M;
  Perm A(static_cast<std::size_t>(n)), B(static_cast<std::size_t>(n));
  for (int i = 0; i < half; ++i) {
    A[static_cast<std::size_t>(i)] = (i + 1) % half;          // a * a^i
    A[static_cast<std::size_t>(half + i)] = half + (i + 1) % half;  // a * a^i b
    B[static_cast<std::size_t>(i)] = half + ((half - i) % half);    // b * a^i = a^-i b
    B[static_cast<std::size_t>(half + i)] = ((M - i) % half + half) % half;  // b * a^i b = a^(m-i)
  }
  return FiniteGroup::from_generators(n, {A, B}, bound, "dicyclic" + std::to_string(m));
}

FiniteGroup make_symmetric(i64 n, i64 bound) {
  if (n < 1) fail(ErrorKind::Input, "symmetric: n must be >= 1");
  i64 order = 1;
  for (i64 k = 2; k <= n; ++k) {
    order *= k;
    if (order > bound) fail(ErrorKind::Bound, "symmetric: order exceeds bound");
  }
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(perm_from_cycles(static_cast<int>(n), {{0, 1}}));
  if (n >= 3) {
    std::vector<int> cyc(static_cast<std::size_t>(n));
    std::iota(cyc.begin(), cyc.end(), 0);
    gens.push_back(perm_from_cycles(static_cast<int>(n), {cyc}));
  }
  return FiniteGroup::from_generators(static_cast<int>(n), std::move(gens), bound,
                                      "symmetric" + std::to_string(n));
}

FiniteGroup make_alternating(i64 n, i64 bound) {
  if (n < 1) fail(ErrorKind::Input, "alternating: n must be >= 1");
  i64 order = 1;
  for (i64 k = 2; k <= n; ++k) order *= k;
  if (n >= 2) order /= 2;
  if (order > bound) fail(ErrorKind::Bound, "alternating: order exceeds bound");
  std::vector<Perm> gens;
  // Consecutive 3-cycles generate A_n.
  for (int i = 0; i + 2 < n; ++i)
    gens.push_back(perm_from_cycles(static_cast<int>(n), {{i, i + 1, i + 2}}));
  return FiniteGroup::from_generators(static_cast<int>(std::max<i64>(n, 1)), std::move(gens),
                                      bound, "alternating" + std::to_string(n));
}

// SL(2,3) acting on the 8 nonzero vectors of F_3^2.
FiniteGroup make_sl23(i64 bound) {
  auto vec_index = [](int x, int y) {
    int idx = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == 0 && b == 0) continue;
        if (a == x && b == y) return idx;
        ++idx;
      }
    fail(ErrorKind::Internal, "zero vector");
  };
  auto matrix_perm = [&](int m00, int m01, int m10, int m11) {
    Perm p(8);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        if (x == 0 && y == 0) continue;
        int nx = (m00 * x + m01 * y) % 3;
        int ny = (m10 * x + m11 * y) % 3;
        p[static_cast<std::size_t>(vec_index(x, y))] = vec_index(nx, ny);
      }
    return p;
  };
  // [[1,1],[0,1]] and [[1,0],[1,1]] generate SL(2,3).
  std::vector<Perm> gens = {matrix_perm(1, 1, 0, 1), matrix_perm(1, 0, 1, 1)};
  auto G = FiniteGroup::from_generators(8, std::move(gens), bound, "sl23");
  if (G.order() != 24) fail(ErrorKind::Internal, "sl23 construction has wrong order");
  return G;
}

}  // namespace

FiniteGroup make_named_group(const std::string& name, const std::vector<i64>& params,
                             i64 order_bound) {
  auto need_param = [&](std::size_t k) {
    if (params.size() != k)
      fail(ErrorKind::Input, name + ": expected " + std::to_string(k) + " parameter(s)");
  };
  FiniteGroup G;
  if (name == "cyclic") {
    need_param(1);
    G = make_cyclic(params[0], order_bound);
  } else if (name == "dihedral") {
    need_param(1);
    G = make_dihedral(params[0], order_bound);
  } else if (name == "dicyclic") {
    need_param(1);
    G = make_dicyclic(params[0], order_bound);
  } else if (name == "symmetric") {
    need_param(1);
    G = make_symmetric(params[0], order_bound);
  } else if (name == "alternating") {
    need_param(1);
    G = make_alternating(params[0], order_bound);
  } else if (name == "klein4") {
    need_param(0);
    G = make_klein4(order_bound);
  } else if (name == "sl23") {
    need_param(0);
    G = make_sl23(order_bound);
  } else {
    fail(ErrorKind::Input, "unknown group family: " + name);
  }
  G.spec = json{{"type", "named"}, {"name", name}, {"params", params}};
  return G;
}

FiniteGroup group_from_json(const json& spec, i64 order_bound) {
  if (!spec.is_object() || !spec.contains("type"))
    fail(ErrorKind::Input, "group spec: missing \"type\"");
  const std::string type = spec.at("type").get<std::string>();
  if (type == "named") {
    std::vector<i64> params;
    if (spec.contains("params"))
      for (const auto& v : spec.at("params")) params.push_back(v.get<i64>());
    return make_named_group(spec.at("name").get<std::string>(), params, order_bound);
  }
  if (type == "permutation") {
    const int degree = spec.at("degree").get<int>();
    std::vector<Perm> gens;
    for (const auto& g : spec.at("generators")) {
      Perm p;
      for (const auto& v : g) p.push_back(v.get<int>());
      gens.push_back(std::move(p));
    }
    auto G = FiniteGroup::from_generators(degree, std::move(gens), order_bound);
    G.spec = json{{"type", "permutation"}, {"degree", degree}, {"generators", spec.at("generators")}};
    return G;
  }
  if (type == "product") {
    const auto& factors = spec.at("factors");
    if (!factors.is_array() || factors.empty())
      fail(ErrorKind::Input, "group spec: product needs at least one factor");
    FiniteGroup G = group_from_json(factors[0], order_bound);
    for (std::size_t i = 1; i < factors.size(); ++i)
      G = direct_product(G, group_from_json(factors[i], order_bound), order_bound);
    return G;
  }
  fail(ErrorKind::Input, "group spec: unknown type " + type);
}

FiniteGroup group_from_spec_string(const std::string& text, i64 order_bound) {
  if (!text.empty() && text.front() == '{') {
    json spec = json::parse(text, nullptr, false);
    if (spec.is_discarded()) fail(ErrorKind::Input, "group spec: invalid JSON");
    return group_from_json(spec, order_bound);
  }
  // name[:p1[,p2,...]]
  std::string name = text;
  std::vector<i64> params;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      std::size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      try {
        params.push_back(std::stoll(rest.substr(pos, comma - pos)));
      } catch (const std::exception&) {
        fail(ErrorKind::Input, "group spec: bad parameter in \"" + text + "\"");
      }
      pos = comma + 1;
    }
  }
  return make_named_group(name, params, order_bound);
}

}  // namespace cgt
