#include "helibox/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "helibox/operators.hpp"

namespace helibox {

namespace {

constexpr double tol_factor = 1e-11;

int eps(int i, int j, int k) {
  if (i == j || j == k || i == k)
    return 0;
  return (j - i + 3) % 3 == 1 ? 1 : -1; // cyclic -> +1, anticyclic -> -1
}

// Analytic samples of a scalar recipe: value, gradient, Hessian.
struct ScalarSamples {
  ScalarField v;
  std::array<ScalarField, 3> d;
  std::array<std::array<ScalarField, 3>, 3> dd;

  ScalarSamples(const TrigPoly& p, const GridPtr& g, bool hessian) {
    v = p.sample(g);
    for (int i = 0; i < 3; ++i) {
      const TrigPoly di = p.derivative(i);
      d[i] = di.sample(g);
      if (hessian)
        for (int j = i; j < 3; ++j)
          dd[i][j] = di.derivative(j).sample(g);
    }
  }
  const ScalarField& hess(int i, int j) const {
    return i <= j ? dd[i][j] : dd[j][i];
  }
  VectorField grad() const { return VectorField{d[0], d[1], d[2]}; }
};

struct VectorSamples {
  std::array<ScalarSamples, 3> c;

  VectorSamples(const TrigVec& v, const GridPtr& g, bool hessian)
      : c{ScalarSamples(v.x, g, hessian), ScalarSamples(v.y, g, hessian),
          ScalarSamples(v.z, g, hessian)} {}
  VectorField value() const { return VectorField{c[0].v, c[1].v, c[2].v}; }
  // d[i].v is component i; d_ij = c[i].d[j] is  d(comp i)/d(x_j).
};

double term_scale(std::initializer_list<const ScalarField*> terms) {
  double s = 0.0;
  for (const ScalarField* t : terms)
    s = std::max(s, max_norm(*t));
  return s;
}

IdentityResult finish(IdentityId id, const GridPtr& g, std::uint64_t,
                      double residual, double scale) {
  IdentityResult r;
  r.id = id;
  r.name = identity_name(id);
  r.n = g->n();
  r.residual = residual;
  r.scale = scale;
  r.tolerance = tol_factor * scale;
  r.pass = residual <= r.tolerance;
  return r;
}

// rho w.grad P - u.(grad rho x grad P) = div{ P curl(rho u) }, with the
// right side expanded by the product rule: grad P.C + P div C,
// C = rho w + grad rho x u.
IdentityResult check_pressure_perfect_divergence(const ManufacturedFieldSet& f,
                                                 const GridPtr& g) {
  const ScalarSamples rho(f.rho, g, true);
  const VectorSamples u(f.u, g, true);
  const TrigVec w_poly = f.u.curl();
  const VectorSamples w(w_poly, g, false);
  const ScalarSamples P(f.P, g, false);

  const VectorField grad_rho = rho.grad();
  const VectorField grad_P = P.grad();
  const VectorField uval = u.value();
  const VectorField wval = w.value();

  const ScalarField t1 = rho.v * dot(wval, grad_P);
  const ScalarField t2 = dot(uval, cross(grad_rho, grad_P));

  const VectorField C = rho.v * wval + cross(grad_rho, uval);
  ScalarField divC(g, Space::physical);
  for (int k = 0; k < 3; ++k) {
    axpy(divC, 1.0, rho.d[k] * wval.comp(k) + rho.v * w.c[k].d[k]);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const int e = eps(k, a, b);
        if (e != 0)
          axpy(divC, static_cast<double>(e),
               rho.hess(a, k) * uval.comp(b) + rho.d[a] * u.c[b].d[k]);
      }
  }
  const ScalarField t3 = dot(grad_P, C) + P.v * divC;

  const ScalarField res = t1 - t2 - t3;
  return finish(IdentityId::pressure_perfect_divergence, g, 0,
                max_norm(res), term_scale({&t1, &t2, &t3}));
}

// rho^2 w.grad(|u|^2/2) = div{ w rho^2 |u|^2/2 } - q rho |u|^2.
IdentityResult check_helicity_source_split(const ManufacturedFieldSet& f,
                                           const GridPtr& g) {
  const ScalarSamples rho(f.rho, g, false);
  const VectorSamples u(f.u, g, false);
  const TrigVec w_poly = f.u.curl();
  const VectorSamples w(w_poly, g, false);

  const VectorField uval = u.value();
  const VectorField wval = w.value();
  const ScalarField mag2 = magnitude_squared(uval);
  const ScalarField rho2 = rho.v * rho.v;

  // grad(|u|^2/2)_i = sum_j u_j du_j/dx_i
  VectorField grad_half(g, Space::physical);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      axpy(grad_half.comp(i), 1.0, uval.comp(j) * u.c[j].d[i]);

  const ScalarField lhs = rho2 * dot(wval, grad_half);

  // div{ w rho^2 |u|^2 / 2 } by the product rule.
  ScalarField div_flux(g, Space::physical);
  for (int k = 0; k < 3; ++k) {
    axpy(div_flux, 0.5, w.c[k].d[k] * (rho2 * mag2));
    axpy(div_flux, 1.0, wval.comp(k) * ((rho.v * rho.d[k]) * mag2));
    axpy(div_flux, 1.0, wval.comp(k) * (rho2 * dot(uval, VectorField{
                                                             u.c[0].d[k],
                                                             u.c[1].d[k],
                                                             u.c[2].d[k],
                                                         })));
  }

  const ScalarField q = dot(wval, rho.grad());
  const ScalarField src = q * (rho.v * mag2);

  const ScalarField res = lhs - div_flux + src;
  return finish(IdentityId::helicity_source_split, g, 0, max_norm(res),
                term_scale({&lhs, &div_flux, &src}));
}

// dt q + u.grad q + q div u + [grad(rho^{-1}) x grad P].grad rho = 0 with
// dt u := -u.grad u - rho^{-1} grad P and dt rho := -u.grad rho. Holds for
// arbitrary smooth fields; div u = 0 recovers the material invariance of q.
IdentityResult check_ertel_material_invariance(const ManufacturedFieldSet& f,
                                               const GridPtr& g) {
  const ScalarSamples rho(f.rho, g, true);
  const VectorSamples u(f.u, g, true);
  const TrigVec w_poly = f.u.curl();
  const VectorSamples w(w_poly, g, false);
  const ScalarSamples P(f.P, g, false);

  const VectorField uval = u.value();
  const VectorField wval = w.value();
  const VectorField grad_rho = rho.grad();
  const VectorField grad_P = P.grad();
  const ScalarField rho_inv = reciprocal(rho.v);

  // curl(u.grad u)_i = eps_ijk ( du_l/dx_j du_k/dx_l + u_l d2u_k/dx_l dx_j )
  VectorField curl_adv(g, Space::physical);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int e = eps(i, j, k);
        if (e == 0)
          continue;
        for (int l = 0; l < 3; ++l)
          axpy(curl_adv.comp(i), static_cast<double>(e),
               u.c[l].d[j] * u.c[k].d[l] + uval.comp(l) * u.c[k].hess(l, j));
      }

  // grad(rho^{-1}) x grad P = -rho^{-2} (grad rho x grad P)
  const ScalarField neg_rho_inv2 = (-1.0) * (rho_inv * rho_inv);
  const VectorField press_curl = neg_rho_inv2 * cross(grad_rho, grad_P);

  const VectorField w_t = (-1.0) * curl_adv + (-1.0) * press_curl;

  // grad(dt rho) = -grad(u.grad rho)
  VectorField grad_rho_t(g, Space::physical);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      axpy(grad_rho_t.comp(i), -1.0,
           u.c[j].d[i] * rho.d[j] + uval.comp(j) * rho.hess(j, i));

  const ScalarField q_t = dot(w_t, grad_rho) + dot(wval, grad_rho_t);

  // u.grad q with grad q_i = sum_j ( dw_j/dx_i rho_j + w_j d2rho/dx_j dx_i )
  VectorField grad_q(g, Space::physical);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      axpy(grad_q.comp(i), 1.0,
           w.c[j].d[i] * rho.d[j] + wval.comp(j) * rho.hess(j, i));
  const ScalarField adv_q = dot(uval, grad_q);

  const ScalarField divu = f.u.divergence().sample(g);
  const ScalarField q = dot(wval, grad_rho);
  const ScalarField stretch = q * divu;
  const ScalarField press = dot(press_curl, grad_rho);

  const ScalarField res = q_t + adv_q + stretch + press;
  return finish(IdentityId::ertel_material_invariance, g, 0, max_norm(res),
                term_scale({&q_t, &adv_q, &stretch, &press}));
}

// dt h_c + h_c div u + div J_c + q_c |u|^2 / 2 = 0 with
// dt(rho u) := -u.grad(rho u) - rho u div u + (curl B) x B - grad P and
// dt B := B.grad u - B div u - u.grad B (requires div B = 0, true for the
// manufactured B by construction).
IdentityResult check_cross_helicity_budget(const ManufacturedFieldSet& f,
                                           const GridPtr& g) {
  const ScalarSamples rho(f.rho, g, false);
  const VectorSamples u(f.u, g, false);
  const VectorSamples B(f.B, g, false);
  const ScalarSamples P(f.P, g, false);
  const TrigVec curlB_poly = f.B.curl();
  const VectorSamples curlB(curlB_poly, g, false);

  const VectorField uval = u.value();
  const VectorField Bval = B.value();
  const ScalarField divu = f.u.divergence().sample(g);
  const ScalarField mag2 = magnitude_squared(uval);
  const VectorField grad_P = P.grad();
  const VectorField lorentz = cross(curlB.value(), Bval);

  // d(rho u_j)/dx_i = rho_i u_j + rho du_j/dx_i
  auto mom_grad = [&](int j, int i) {
    return rho.d[i] * uval.comp(j) + rho.v * u.c[j].d[i];
  };

  VectorField mom_t(g, Space::physical);
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i)
      axpy(mom_t.comp(j), -1.0, uval.comp(i) * mom_grad(j, i));
    axpy(mom_t.comp(j), -1.0, (rho.v * uval.comp(j)) * divu);
    axpy(mom_t.comp(j), 1.0, lorentz.comp(j) + (-1.0) * grad_P.comp(j));
  }

  VectorField B_t(g, Space::physical);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      axpy(B_t.comp(j), 1.0,
           Bval.comp(i) * u.c[j].d[i] + (-1.0) * (uval.comp(i) * B.c[j].d[i]));
  for (int j = 0; j < 3; ++j)
    axpy(B_t.comp(j), -1.0, Bval.comp(j) * divu);

  const VectorField mom = rho.v * uval;
  const ScalarField hc_t = dot(mom_t, Bval) + dot(mom, B_t);

  const ScalarField hc = rho.v * dot(uval, Bval);

  // div(h_c u) = h_c div u + u.grad h_c
  VectorField grad_hc(g, Space::physical);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      axpy(grad_hc.comp(i), 1.0,
           mom_grad(j, i) * Bval.comp(j) + mom.comp(j) * B.c[j].d[i]);

  // div(B (P - rho |u|^2 / 2)); div B evaluated from the recipe.
  ScalarField divB(g, Space::physical);
  for (int k = 0; k < 3; ++k)
    axpy(divB, 1.0, B.c[k].d[k]);
  VectorField grad_head(g, Space::physical); // grad(P - rho |u|^2/2)
  for (int i = 0; i < 3; ++i) {
    axpy(grad_head.comp(i), 1.0, grad_P.comp(i) + (-0.5) * (rho.d[i] * mag2));
    for (int j = 0; j < 3; ++j)
      axpy(grad_head.comp(i), -1.0, rho.v * (uval.comp(j) * u.c[j].d[i]));
  }
  const ScalarField head = P.v + (-0.5) * (rho.v * mag2);
  const ScalarField div_J = hc * divu + dot(uval, grad_hc) + head * divB +
                            dot(Bval, grad_head);

  const ScalarField qc = dot(Bval, rho.grad());
  const ScalarField weight = hc * divu;
  const ScalarField src = 0.5 * (qc * mag2);

  const ScalarField res = hc_t + weight + div_J + src;
  return finish(IdentityId::cross_helicity_budget, g, 0, max_norm(res),
                term_scale({&hc_t, &weight, &div_J, &src}));
}

// grad(rho^{-1}) x grad(K rho^gamma) = 0: both gradients are parallel to
// grad rho once the pressure is a function of density alone.
IdentityResult
check_barotropic_gradient_alignment(const ManufacturedFieldSet& f,
                                    const GridPtr& g) {
  constexpr double K = 1.0;
  constexpr double gamma = 5.0 / 3.0;
  const ScalarSamples rho(f.rho, g, false);

  const VectorField grad_rho = rho.grad();
  const ScalarField rho_inv = reciprocal(rho.v);
  const VectorField grad_rho_inv =
      ((-1.0) * (rho_inv * rho_inv)) * grad_rho;
  const VectorField grad_P =
      ((gamma * K) * pow_field(rho.v, gamma - 1.0)) * grad_rho;

  const VectorField res = cross(grad_rho_inv, grad_P);
  const double scale = max_norm(grad_rho_inv) * max_norm(grad_P);
  IdentityResult r = finish(IdentityId::barotropic_gradient_alignment, g, 0,
                            max_norm(res), scale);
  return r;
}

} // namespace

const std::vector<IdentityId>& identity_catalogue() {
  static const std::vector<IdentityId> ids = {
      IdentityId::pressure_perfect_divergence,
      IdentityId::helicity_source_split,
      IdentityId::ertel_material_invariance,
      IdentityId::cross_helicity_budget,
      IdentityId::barotropic_gradient_alignment,
  };
  return ids;
}

std::string identity_name(IdentityId id) {
  switch (id) {
  case IdentityId::pressure_perfect_divergence:
    return "pressure-perfect-divergence";
  case IdentityId::helicity_source_split:
    return "helicity-source-split";
  case IdentityId::ertel_material_invariance:
    return "ertel-material-invariance";
  case IdentityId::cross_helicity_budget:
    return "cross-helicity-budget";
  case IdentityId::barotropic_gradient_alignment:
    return "barotropic-gradient-alignment";
  }
  throw std::invalid_argument("identity_name: unknown identity");
}

IdentityResult verify_identity(IdentityId id, const ManufacturedFieldSet& f,
                               const GridPtr& g) {
  switch (id) {
  case IdentityId::pressure_perfect_divergence:
    return check_pressure_perfect_divergence(f, g);
  case IdentityId::helicity_source_split:
    return check_helicity_source_split(f, g);
  case IdentityId::ertel_material_invariance:
    return check_ertel_material_invariance(f, g);
  case IdentityId::cross_helicity_budget:
    return check_cross_helicity_budget(f, g);
  case IdentityId::barotropic_gradient_alignment:
    return check_barotropic_gradient_alignment(f, g);
  }
  throw std::invalid_argument("verify_identity: unknown identity");
}

std::vector<IdentityResult> verify_all_identities(int seed_count) {
  if (seed_count < 1)
    throw std::invalid_argument("verify_all_identities: seed_count >= 1");
  std::vector<IdentityResult> rows;
  for (int n : {32, 64}) {
    const GridPtr g = make_grid(n);
    for (int seed = 0; seed < seed_count; ++seed) {
      const ManufacturedFieldSet f =
          generate_fields(static_cast<std::uint64_t>(seed), 4);
      for (IdentityId id : identity_catalogue()) {
        IdentityResult r = verify_identity(id, f, g);
        r.seed = static_cast<std::uint64_t>(seed);
        rows.push_back(std::move(r));
      }
    }
  }
  return rows;
}

} // namespace helibox
