#include "spex/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>

namespace spex {

void adjacency_multiply(const Graph& g, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
  int n = g.vertex_count();
  y.resize(n);
  for (int v = 0; v < n; ++v) {
    double s = 0.0;
    const std::uint64_t* r = g.row(v);
    for (int w = 0; w < g.row_words(); ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        s += x[w * 64 + Graph::ctz(bits)];
        bits &= bits - 1;
      }
    }
    y[v] = s;
  }
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  int n = g.vertex_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  g.for_each_edge([&](int u, int v) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  });
  return a;
}

namespace {

SpectralResult power_iteration(const Graph& g, double tol, const Eigen::VectorXd* warm) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("spectral_radius: empty graph");
  if (!(tol > 0)) throw std::invalid_argument("spectral_radius: tol must be > 0");

  SpectralResult res;
  Eigen::VectorXd x;
  if (warm && warm->size() == n && warm->minCoeff() > 0.0)
    x = *warm / warm->maxCoeff();
  else
    x = Eigen::VectorXd::Ones(n);

  Eigen::VectorXd ax(n);
  long long cap = 100LL * n + 10000;
  for (long long it = 1; it <= cap; ++it) {
    adjacency_multiply(g, x, ax);
    double rho = x.dot(ax) / x.squaredNorm();
    double resid = (ax - rho * x).lpNorm<Eigen::Infinity>();
    res.rho = rho;
    res.residual = resid;
    res.iterations = static_cast<int>(it);
    if (resid <= tol) {
      res.converged = true;
      res.vector = x;
      return res;
    }
    ax += x;                 // unit shift: iterate with A + I
    x = ax / ax.maxCoeff();  // keep max entry 1
  }
  res.converged = false;
  res.vector = x;
  return res;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
  return power_iteration(g, tol, nullptr);
}

SpectralResult spectral_radius(const Graph& g, double tol, const Eigen::VectorXd& warm_start) {
  return power_iteration(g, tol, &warm_start);
}

SpectralResult perron_vector(const Graph& g, double tol) {
  if (!g.is_connected())
    throw std::invalid_argument("perron_vector: input graph must be connected");
  return power_iteration(g, tol, nullptr);
}

double quotient_rho(int k, int r, std::span<const int> parts) {
  if (k < 1) throw std::invalid_argument("quotient_rho: k must be >= 1");
  if (r < 1) throw std::invalid_argument("quotient_rho: r must be >= 1");
  if (static_cast<int>(parts.size()) != r)
    throw std::invalid_argument("quotient_rho: need exactly r part sizes");
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("quotient_rho: part sizes must be >= 1");

  int m = r + (k >= 2 ? 1 : 0);
  // Quotient rows are indexed by the r parts plus (for k >= 2) the dominating
  // class; B(i,j). The matrix is symmetrized by the class-size similarity
  // M(i,j) = sqrt(B(i,j) B(j,i)), which preserves the spectrum.
  auto b = [&](int i, int j) -> double {
    bool i_dom = (i == r), j_dom = (j == r);
    if (i_dom && j_dom) return static_cast<double>(k - 2);
    if (j_dom) return static_cast<double>(k - 1);
    if (i_dom) return static_cast<double>(parts[j]);
    return i == j ? 0.0 : static_cast<double>(parts[j]);
  };
  Eigen::MatrixXd msym(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      msym(i, j) = (i == j) ? b(i, i) : std::sqrt(b(i, j) * b(j, i));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(msym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double quotient_rho(int k, int r, const std::vector<int>& parts) {
  return quotient_rho(k, r, std::span<const int>(parts));
}

double rho_lower_bound(long long n, int k, int r) {
  if (n <= 0) throw std::invalid_argument("rho_lower_bound: n must be >= 1");
  if (k < 1 || r < 1) throw std::invalid_argument("rho_lower_bound: k, r must be >= 1");
  double nd = static_cast<double>(n);
  return (r - 1.0) / r * nd + 2.0 * (k - 1) / r -
         (1.0 / nd) * ((k - 1.0) * (r + k - 1.0) / r + r / 2.0);
}

std::vector<int> family_roles(int n, int k, int r) {
  std::vector<int> roles;
  roles.reserve(n);
  for (int i = 0; i < k - 1; ++i) roles.push_back(r);
  auto parts = turan_parts(n - k + 1, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < parts[i]; ++j) roles.push_back(i);
  return roles;
}

ProfileReport eigenvector_profile_check(const Graph& g, int k,
                                        std::span<const int> parts,
                                        std::span<const int> role_of_vertex,
                                        double tol) {
  int n = g.vertex_count();
  int r = static_cast<int>(parts.size());
  if (k < 1 || r < 1) throw std::invalid_argument("profile check: k, r must be >= 1");
  if (static_cast<int>(role_of_vertex.size()) != n)
    throw std::invalid_argument("profile check: role map size mismatch");

  // Validate that the role map really describes K_{k-1} v K_r(parts).
  std::vector<long long> role_count(r + 1, 0);
  for (int v = 0; v < n; ++v) {
    int role = role_of_vertex[v];
    if (role < 0 || role > r)
      throw std::invalid_argument("profile check: role out of range");
    ++role_count[role];
  }
  if (role_count[r] != k - 1)
    throw std::invalid_argument("profile check: dominating class size must be k-1");
  for (int i = 0; i < r; ++i)
    if (role_count[i] != parts[i])
      throw std::invalid_argument("profile check: part size mismatch with role map");
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool expect = role_of_vertex[u] == r || role_of_vertex[v] == r ||
                    role_of_vertex[u] != role_of_vertex[v];
      if (g.has_edge(u, v) != expect)
        throw std::invalid_argument("profile check: role map inconsistent with adjacency");
    }

  SpectralResult sr = perron_vector(g, std::min(tol, kDefaultTol));
  ProfileReport rep;
  rep.rho = sr.rho;
  const Eigen::VectorXd& x = sr.vector;  // max-normalized

  // Join-normalization scale: dominating entries (or, for k = 1, the virtual
  // join entry recovered from the part equations) go to 1.
  double scale;
  if (k >= 2) {
    double dom_sum = 0.0;
    for (int v = 0; v < n; ++v)
      if (role_of_vertex[v] == r) dom_sum += x[v];
    scale = dom_sum / (k - 1);
  } else {
    double weighted = 0.0;
    for (int v = 0; v < n; ++v) weighted += x[v];
    scale = weighted / (rep.rho + 1.0);
  }

  double dom_spread = 0.0, dom_min = 1e300, other_max = -1e300;
  double part_dev = 0.0;
  for (int v = 0; v < n; ++v) {
    double xv = x[v] / scale;
    int role = role_of_vertex[v];
    if (role == r) {
      dom_spread = std::max(dom_spread, std::abs(xv - 1.0));
      dom_min = std::min(dom_min, xv);
    } else {
      other_max = std::max(other_max, xv);
      double want = (rep.rho + 1.0) / (rep.rho + parts[role]);
      part_dev = std::max(part_dev, std::abs(xv - want));
    }
  }
  rep.dominating_spread = (k >= 2) ? dom_spread : 0.0;
  rep.dominating_margin = (k >= 2) ? dom_min - other_max : 0.0;
  rep.part_profile_deviation = part_dev;
  rep.min_entry = x.minCoeff();
  rep.entry_lower_bound = (r >= 3) ? 1.0 - 1.0 / (r - 1) : 0.0;
  rep.pass = rep.part_profile_deviation <= tol &&
             rep.min_entry >= rep.entry_lower_bound - tol &&
             (k < 2 || (rep.dominating_spread <= tol && rep.dominating_margin >= -tol));
  return rep;
}

}  // namespace spex
