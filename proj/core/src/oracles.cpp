#include "gauss_forge/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "gauss_forge/error.hpp"

namespace gauss_forge {

std::string ConwayPoly::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    long long c = coeffs[k];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    long long a = c < 0 ? -c : c;
    if (a != 1 || k == 0) out += std::to_string(a);
    if (k >= 1) out += "z";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

namespace {

// Gauss-code view used by the skein recursion: visit = 2 * crossing + over.
struct Code {
  std::vector<std::vector<int>> comps;
  std::vector<int> signs;
  std::size_t crossingless = 0;
};

Code normalize(const Code& in) {
  Code out;
  out.crossingless = in.crossingless;
  std::vector<int> relabel(in.signs.size(), -1);
  for (const auto& comp : in.comps) {
    if (comp.empty()) {
      ++out.crossingless;
      continue;
    }
    auto& c = out.comps.emplace_back();
    for (int v : comp) {
      int x = v >> 1;
      if (relabel[static_cast<std::size_t>(x)] < 0) {
        relabel[static_cast<std::size_t>(x)] = static_cast<int>(out.signs.size());
        out.signs.push_back(in.signs[static_cast<std::size_t>(x)]);
      }
      c.push_back(relabel[static_cast<std::size_t>(x)] * 2 + (v & 1));
    }
  }
  return out;
}

std::string key_of(const Code& c) {
  std::string k = std::to_string(c.crossingless) + ":";
  for (int s : c.signs) k += s > 0 ? '+' : '-';
  for (const auto& comp : c.comps) {
    k += '|';
    for (int v : comp) k += std::to_string(v) + ",";
  }
  return k;
}

using Poly = std::vector<long long>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

class Skein {
 public:
  Poly eval(const Code& raw) {
    Code d = normalize(raw);
    std::string key = key_of(d);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Poly result = compute(d);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  Poly compute(const Code& d) {
    const std::size_t total = d.comps.size() + d.crossingless;
    if (d.signs.empty() || d.crossingless > 0) return total == 1 ? Poly{1} : Poly{};

    std::vector<bool> seen(d.signs.size(), false);
    int bad = -1;
    for (const auto& comp : d.comps) {
      for (int v : comp) {
        int x = v >> 1;
        if (seen[static_cast<std::size_t>(x)]) continue;
        seen[static_cast<std::size_t>(x)] = true;
        if ((v & 1) == 0) {
          bad = x;
          break;
        }
      }
      if (bad >= 0) break;
    }
    if (bad < 0) return total == 1 ? Poly{1} : Poly{};

    Code switched = d;
    for (auto& comp : switched.comps)
      for (int& v : comp)
        if ((v >> 1) == bad) v ^= 1;
    switched.signs[static_cast<std::size_t>(bad)] = -d.signs[static_cast<std::size_t>(bad)];

    Poly a = eval(switched);
    Poly b = eval(smooth(d, bad));
    const long long sign = d.signs[static_cast<std::size_t>(bad)];
    Poly out(std::max(a.size(), b.size() + 1), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i + 1] += sign * b[i];
    trim(out);
    return out;
  }

  static Code smooth(const Code& d, int x) {
    Code out;
    out.signs = d.signs;
    out.crossingless = d.crossingless;
    std::vector<std::pair<std::size_t, std::size_t>> where;
    for (std::size_t c = 0; c < d.comps.size(); ++c)
      for (std::size_t i = 0; i < d.comps[c].size(); ++i)
        if ((d.comps[c][i] >> 1) == x) where.emplace_back(c, i);
    auto [c1, p] = where[0];
    auto [c2, q] = where[1];
    for (std::size_t c = 0; c < d.comps.size(); ++c)
      if (c != c1 && c != c2) out.comps.push_back(d.comps[c]);
    if (c1 == c2) {
      const auto& comp = d.comps[c1];
      out.comps.emplace_back(comp.begin() + static_cast<std::ptrdiff_t>(p) + 1,
                             comp.begin() + static_cast<std::ptrdiff_t>(q));
      std::vector<int> rest(comp.begin() + static_cast<std::ptrdiff_t>(q) + 1, comp.end());
      rest.insert(rest.end(), comp.begin(), comp.begin() + static_cast<std::ptrdiff_t>(p));
      out.comps.push_back(std::move(rest));
    } else {
      auto tail_after = [](const std::vector<int>& comp, std::size_t at) {
        std::vector<int> w(comp.begin() + static_cast<std::ptrdiff_t>(at) + 1, comp.end());
        w.insert(w.end(), comp.begin(), comp.begin() + static_cast<std::ptrdiff_t>(at));
        return w;
      };
      std::vector<int> merged = tail_after(d.comps[c1], p);
      std::vector<int> w2 = tail_after(d.comps[c2], q);
      merged.insert(merged.end(), w2.begin(), w2.end());
      out.comps.push_back(std::move(merged));
    }
    return out;
  }

  std::unordered_map<std::string, Poly> memo_;
};

Code code_of(const ClosedDiagram& d) {
  Code c;
  for (const PdCrossing& x : d.crossings()) c.signs.push_back(x.sign);
  for (const auto& comp : d.components()) {
    if (comp.empty()) continue;
    auto& out = c.comps.emplace_back();
    for (const Visit& v : comp) out.push_back(static_cast<int>(v.crossing) * 2 + (v.over ? 1 : 0));
  }
  c.crossingless = d.crossingless_components();
  return c;
}

// Truncated noncommutative power series in X_0, X_1, X_2 (degree <= 2).
struct Series {
  long long c = 0;
  std::array<long long, 3> lin{};
  std::array<std::array<long long, 3>, 3> quad{};

  friend Series operator*(const Series& a, const Series& b) {
    Series r;
    r.c = a.c * b.c;
    for (int i = 0; i < 3; ++i) r.lin[i] = a.c * b.lin[i] + a.lin[i] * b.c;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r.quad[i][j] = a.c * b.quad[i][j] + a.quad[i][j] * b.c + a.lin[i] * b.lin[j];
    return r;
  }
};

using Linear = std::array<long long, 3>;

// Expansion of w^{-1} x_o w (or its inverse) where w has linear part `w`.
Series conjugate_meridian(std::size_t o, const Linear& w, int exponent) {
  Series s;
  s.c = 1;
  const long long e = exponent;
  s.lin[o] = e;
  for (std::size_t j = 0; j < 3; ++j) {
    // X_o W - W X_o, negated for the inverse
    s.quad[o][j] += e * w[j];
    s.quad[j][o] -= e * w[j];
  }
  if (exponent < 0) s.quad[o][o] += 1;
  return s;
}

}  // namespace

ConwayPoly conway(const ClosedDiagram& diagram, std::size_t max_crossings) {
  if (diagram.crossings().size() > max_crossings)
    throw Error(ErrorCode::SizeLimit, std::to_string(diagram.crossings().size()) + " crossings exceed the skein limit of " +
                                          std::to_string(max_crossings));
  Skein skein;
  return ConwayPoly{skein.eval(code_of(diagram))};
}

long long casson_oracle(const ClosedDiagram& diagram, std::size_t max_crossings) {
  if (diagram.component_count() != 1) throw Error(ErrorCode::Validation, "casson_oracle needs a knot");
  return conway(diagram, max_crossings).coefficient(2);
}

long long magnus_mu(const ClosedDiagram& d, std::size_t i, std::size_t j, std::size_t k, std::size_t max_crossings) {
  if (d.component_count() != 3) throw Error(ErrorCode::Validation, "magnus_mu needs a 3-component link");
  if (i > 2 || j > 2 || k > 2) throw Error(ErrorCode::Validation, "component index out of range");
  if (d.crossings().size() > max_crossings)
    throw Error(ErrorCode::SizeLimit, std::to_string(d.crossings().size()) + " crossings exceed the Magnus limit of " +
                                          std::to_string(max_crossings));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      if (a != b && closed_linking(d, a, b) != 0)
        throw Error(ErrorCode::NonzeroPairwiseLinking,
                    "lk(" + std::to_string(a) + "," + std::to_string(b) + ") = " + std::to_string(closed_linking(d, a, b)));

  // Abelianized conjugator of the over-arc at every crossing.
  std::vector<Linear> conj(d.crossings().size());
  for (std::size_t comp = 0; comp < 3; ++comp) {
    Linear w{};
    for (const Visit& v : d.components()[comp]) {
      if (v.over) {
        conj[v.crossing] = w;
      } else {
        w[d.over_component(v.crossing)] += d.crossings()[v.crossing].sign;
      }
    }
  }
  Series longitude;
  longitude.c = 1;
  for (const Visit& v : d.components()[k]) {
    if (v.over) continue;
    const std::size_t o = d.over_component(v.crossing);
    longitude = longitude * conjugate_meridian(o, conj[v.crossing], d.crossings()[v.crossing].sign);
  }
  return longitude.quad[i][j];
}

long long magnus_mu123(const ClosedDiagram& diagram, std::size_t max_crossings) {
  return magnus_mu(diagram, 0, 1, 2, max_crossings);
}

namespace {

struct V3 {
  double x, y, z;
};
V3 sub(V3 a, V3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
V3 cross(V3 a, V3 b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
double dot(V3 a, V3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(V3 a) { return std::sqrt(dot(a, a)); }

double segment_distance(V3 p0, V3 p1, V3 q0, V3 q1) {
  const V3 d1 = sub(p1, p0), d2 = sub(q1, q0), r = sub(p0, q0);
  const double a = dot(d1, d1), e = dot(d2, d2), f = dot(d2, r);
  const double c = dot(d1, r), b = dot(d1, d2);
  const double denom = a * e - b * b;
  double s = denom > 1e-300 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
  double t = (b * s + f) / e;
  if (t < 0) {
    t = 0;
    s = std::clamp(-c / a, 0.0, 1.0);
  } else if (t > 1) {
    t = 1;
    s = std::clamp((b - c) / a, 0.0, 1.0);
  }
  const V3 pc{p0.x + s * d1.x, p0.y + s * d1.y, p0.z + s * d1.z};
  const V3 qc{q0.x + t * d2.x, q0.y + t * d2.y, q0.z + t * d2.z};
  return norm(sub(pc, qc));
}

double unit_dot(V3 a, V3 b) { return std::clamp(dot(a, b) / (norm(a) * norm(b)), -1.0, 1.0); }

}  // namespace

double gauss_linking_integral(std::span<const Vec3> a, std::span<const Vec3> b) {
  if (a.size() < 2 || b.size() < 2) throw Error(ErrorCode::Validation, "polygons need at least two vertices");
  double scale = 0.0;
  for (const Vec3& v : a) scale = std::max({scale, std::abs(v.x), std::abs(v.y), std::abs(v.z)});
  for (const Vec3& v : b) scale = std::max({scale, std::abs(v.x), std::abs(v.y), std::abs(v.z)});
  const double tiny = 1e-12 * std::max(scale, 1.0);

  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const V3 r1{a[i].x, a[i].y, a[i].z};
    const Vec3& an = a[(i + 1) % a.size()];
    const V3 r2{an.x, an.y, an.z};
    for (std::size_t j = 0; j < b.size(); ++j) {
      const V3 r3{b[j].x, b[j].y, b[j].z};
      const Vec3& bn = b[(j + 1) % b.size()];
      const V3 r4{bn.x, bn.y, bn.z};
      if (segment_distance(r1, r2, r3, r4) <= tiny)
        throw Error(ErrorCode::IntersectingInputs, "polygons intersect");
      const V3 r13 = sub(r3, r1), r14 = sub(r4, r1), r23 = sub(r3, r2), r24 = sub(r4, r2);
      const V3 n1 = cross(r13, r14), n2 = cross(r14, r24), n3 = cross(r24, r23), n4 = cross(r23, r13);
      const double orient = dot(cross(sub(r4, r3), sub(r2, r1)), r13);
      if (orient == 0.0 || norm(n1) == 0.0 || norm(n2) == 0.0 || norm(n3) == 0.0 || norm(n4) == 0.0) continue;
      double omega = std::asin(unit_dot(n1, n2)) + std::asin(unit_dot(n2, n3)) + std::asin(unit_dot(n3, n4)) +
                     std::asin(unit_dot(n4, n1));
      total += orient > 0 ? omega : -omega;
    }
  }
  return total / (4 * std::numbers::pi);
}

}  // namespace gauss_forge
