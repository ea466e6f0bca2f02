#pragma once

#include <optional>
#include <string>
#include <vector>

#include "staildep/common.hpp"

namespace staildep {

struct Site {
  std::string id;
  double x = 0.0;
  double y = 0.0;
};

// Planar site coordinates. Ids unique, coordinates finite, at least 2 sites.
class SiteSet {
 public:
  explicit SiteSet(std::vector<Site> sites);
  static SiteSet from_csv(const std::string& path);

  std::size_t size() const { return sites_.size(); }
  const Site& operator[](std::size_t i) const { return sites_[i]; }
  double distance(std::size_t u, std::size_t v) const;
  // s_u - s_v
  std::pair<double, double> displacement(std::size_t u, std::size_t v) const;

 private:
  std::vector<Site> sites_;
};

struct LogisticParams {
  double theta;  // (0,1]
};

struct SmithParams {
  double sigma11, sigma22, sigma12;  // Sigma positive definite
};

struct BrownResnickParams {
  double alpha;  // (0,2]
  double rho;    // > 0
  double beta;   // [0, pi/2) radians
  double c;      // > 0
};

struct TauMatrix {
  double tau11, tau22, tau12;  // symmetric positive definite
};

// Sorted distinct site indices, between 1 and 4 of them.
class MarginIndex {
 public:
  MarginIndex(std::initializer_list<int> idx);
  explicit MarginIndex(std::vector<int> idx);
  std::size_t size() const { return idx_.size(); }
  int operator[](std::size_t i) const { return idx_[i]; }
  const std::vector<int>& indices() const { return idx_; }

 private:
  std::vector<int> idx_;
};

enum class Family {
  logistic,
  block_logistic,
  smith,
  smith_iso,
  brown_resnick,
  brown_resnick_tau,
  brown_resnick_iso,
};

int param_dim(Family f);
std::vector<std::string> param_names(Family f);
Family family_from_string(const std::string& name);
std::string family_to_string(Family f);

// A parametric stable tail dependence model: family, natural parameter
// vector, and (for the spatial families) site coordinates.
class ModelSpec {
 public:
  ModelSpec(Family family, Vector params, std::optional<SiteSet> sites,
            int block_size = 0);

  static ModelSpec logistic(double theta, int d);
  static ModelSpec block_logistic(double theta, int d, int block_size);
  static ModelSpec smith(const SmithParams& p, SiteSet sites);
  static ModelSpec smith_iso(double sigma, SiteSet sites);
  static ModelSpec brown_resnick(const BrownResnickParams& p, SiteSet sites);
  static ModelSpec brown_resnick_tau(double alpha, const TauMatrix& tau,
                                     SiteSet sites);
  static ModelSpec brown_resnick_iso(double alpha, double rho, SiteSet sites);

  ModelSpec with_params(const Vector& params) const;

  Family family() const { return family_; }
  const Vector& params() const { return params_; }
  int dim() const { return dim_; }
  int block_size() const { return block_size_; }
  bool spatial() const;
  const SiteSet& sites() const;

  // Semi-variogram between two sites (spatial families only).
  double semivariogram(std::size_t u, std::size_t v) const;

 private:
  Family family_;
  Vector params_;
  std::optional<SiteSet> sites_;
  int dim_;
  int block_size_;
};

struct QuadConfig {
  double psi_tol = 1e-9;  // absolute tolerance for the 2-D psi integrals
  int psi_order = 24;     // tensor order of the starting panel rule
  int psi_max_panels = 4096;
  int gamma_nodes = 16;      // per-axis Gauss-Legendre nodes for Gamma entries
  int gamma_err_nodes = 12;  // comparison rule for the error estimate
};

// gamma_V(h) = [h' (V'V / rho^2) h]^(alpha/2) with V = V(beta, c).
double variogram(const BrownResnickParams& p, double hx, double hy);

// a_uv = sqrt(2 gamma_V(s_u - s_v)); errors on coincident sites.
double pair_dependence_scale(const ModelSpec& model, std::size_t u,
                             std::size_t v);

// Bivariate Brown-Resnick / Smith tail dependence function for a given pair
// scale a, and its partial derivatives.
double br_pair_stdf(double a, double x, double y);
void br_pair_partials(double a, double x, double y, double& dx, double& dy);

// d-variate logistic stable tail dependence function (closed form, any d).
double logistic_stdf(double theta, const double* x, std::size_t n);

// Brown-Resnick margin for n = 1..4 support points with pairwise
// semi-variogram matrix gam (n x n) and strictly positive values x.
double br_margin_stdf(const Matrix& gam, const Vector& x);

// Stable tail dependence function of the margin m at x >= 0 (componentwise).
double stdf_margin(const ModelSpec& model, const MarginIndex& m,
                   const Vector& x);

// Full d-variate stdf, for the closed-form families (logistic any d,
// Brown-Resnick / Smith up to d = 4).
double full_stdf(const ModelSpec& model, const Vector& x);

struct Gradient {
  Vector partials;
  bool one_sided = false;  // some coordinate sat at zero; one-sided difference
};

Gradient stdf_gradient(const ModelSpec& model, const MarginIndex& m,
                       const Vector& x);

// Ordered list of index pairs (u < v) with selection provenance.
struct PairSet {
  std::vector<std::pair<int, int>> pairs;
  std::string selection;  // "all" or "cutoff(<dist>)"
  std::size_t size() const { return pairs.size(); }
};

// psi(theta): per pair the integral of the bivariate margin over [0,1]^2.
Vector psi(const ModelSpec& model, const PairSet& pairs,
           const QuadConfig& quad = {});

struct PsiJacobian {
  Matrix jac;            // q x p
  bool full_rank;        // numerical rank == p at tolerance 1e-8
};

PsiJacobian psi_jacobian(const ModelSpec& model, const PairSet& pairs,
                         const QuadConfig& quad = {});

// T = rho^-2 V(beta,c)' V(beta,c) and its inverse map (beta normalized to
// [0, pi/2)). Round trip is identity to ~1e-12.
TauMatrix reparam_tau(const BrownResnickParams& p);
BrownResnickParams tau_to_br(double alpha, const TauMatrix& tau);

// Smith covariance equivalent to a Brown-Resnick model with alpha = 2:
// Sigma = (rho^2 / 2) (V'V)^{-1}.
SmithParams br_to_smith(const BrownResnickParams& p);

}  // namespace staildep
