#include "algebroid/circle.hpp"

#include <string>

#include "algebroid/exterior.hpp"
#include "algebroid/parallel.hpp"

namespace algebroid {

bool check_action(const LieAlgebra& g, const std::vector<TrigPoly>& phi) {
  if (phi.size() != g.dim()) return false;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      TrigPoly expected;
      const auto c = g.basis_bracket(i, j);
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (c[k] != 0) expected += c[k] * phi[k];
      if (!(vf_bracket(phi[i], phi[j]) == expected)) return false;
    }
  }
  return true;
}

CircleAlgebroid CircleAlgebroid::rank1(TrigPoly p) { return CircleAlgebroid(Rank1Anchor{std::move(p)}, LieAlgebra(0)); }

CircleAlgebroid CircleAlgebroid::action(LieAlgebra g, std::vector<TrigPoly> phi) {
  if (phi.size() != g.dim()) {
    throw Error(ErrorCode::ValidationFailed, "action needs one vector field per generator (" +
                                                 std::to_string(g.dim()) + "), got " + std::to_string(phi.size()));
  }
  if (!check_jacobi(g)) throw Error(ErrorCode::ValidationFailed, "Jacobi identity fails for '" + g.name() + "'");
  if (!check_action(g, phi))
    throw Error(ErrorCode::ValidationFailed, "phi is not a Lie algebra homomorphism into vector fields");
  return CircleAlgebroid(ActionData{std::move(g), std::move(phi)}, LieAlgebra(0));
}

CircleAlgebroid CircleAlgebroid::with_fiber_factor(LieAlgebra fiber) const {
  if (!check_jacobi(fiber)) throw Error(ErrorCode::ValidationFailed, "Jacobi identity fails for the fiber factor");
  return CircleAlgebroid(kind_, std::move(fiber));
}

ActionData CircleAlgebroid::anchored_action() const {
  if (const auto* r = std::get_if<Rank1Anchor>(&kind_)) return ActionData{LieAlgebra(1, "R"), {r->p}};
  return std::get<ActionData>(kind_);
}

std::size_t CircleAlgebroid::anchor_degree() const {
  std::size_t d = 0;
  for (const auto& p : anchored_action().phi) d = std::max(d, p.degree());
  return d;
}

std::size_t CircleAlgebroid::rank() const { return anchored_action().g.dim() + fiber_.dim(); }

bool is_transitive(const CircleAlgebroid& a) {
  if (const auto* r = std::get_if<Rank1Anchor>(&a.kind())) return !has_zero_on_circle(r->p);
  TrigPoly sum_of_squares;
  for (const auto& p : std::get<ActionData>(a.kind()).phi) sum_of_squares += trig_mul(p, p);
  return !has_zero_on_circle(sum_of_squares);
}

namespace {

struct DegreeLayout {
  std::vector<std::size_t> block_offset;  // indexed by anchored degree p
  std::size_t size = 0;
};

}  // namespace

std::size_t TruncatedComplex::position(const MultiIndex& anchored, std::size_t window_coord,
                                       const MultiIndex& fiber) const {
  const std::size_t p = anchored.degree();
  const std::size_t q = fiber.degree();
  std::size_t offset = 0;
  for (std::size_t pp = (p + q > fiber_dim ? p + q - fiber_dim : 0); pp < p; ++pp) {
    offset += binomial_size(anchored_dim, pp) * window_dim(window(pp)) * binomial_size(fiber_dim, p + q - pp);
  }
  const ExteriorBasis h_basis(anchored_dim, p);
  const ExteriorBasis k_basis(fiber_dim, q);
  return offset + (h_basis.position(anchored) * window_dim(window(p)) + window_coord) * k_basis.size() +
         k_basis.position(fiber);
}

TruncatedComplex truncated_complex(const CircleAlgebroid& a, std::size_t N) {
  if (N == 0) throw Error(ErrorCode::ValidationFailed, "truncation window N must be at least 1");
  const ActionData action = a.anchored_action();
  const LieAlgebra& h = action.g;
  const LieAlgebra& k = a.fiber_factor();

  TruncatedComplex out;
  out.base_window = N;
  out.anchor_degree = a.anchor_degree();
  out.anchored_dim = h.dim();
  out.fiber_dim = k.dim();

  const std::size_t nh = h.dim();
  const std::size_t nk = k.dim();
  const std::size_t top = nh + nk;

  std::vector<DegreeLayout> layout(top + 1);
  for (std::size_t r = 0; r <= top; ++r) {
    layout[r].block_offset.assign(nh + 1, 0);
    for (std::size_t p = 0; p <= std::min(r, nh); ++p) {
      layout[r].block_offset[p] = layout[r].size;
      if (r - p > nk) continue;
      layout[r].size += binomial_size(nh, p) * window_dim(out.window(p)) * binomial_size(nk, r - p);
    }
    out.complex.degrees.push_back(layout[r].size);
  }

  std::vector<ExteriorBasis> h_bases, k_bases;
  std::vector<RationalMatrix> h_forms, k_forms;
  for (std::size_t p = 0; p <= nh; ++p) {
    h_bases.emplace_back(nh, p);
    h_forms.push_back(form_differential(h, p));
  }
  for (std::size_t q = 0; q <= nk; ++q) {
    k_bases.emplace_back(nk, q);
    k_forms.push_back(form_differential(k, q));
  }

  const auto pos = [&](std::size_t r, std::size_t p, std::size_t i_pos, std::size_t w, std::size_t j_pos) {
    const std::size_t q = r - p;
    return layout[r].block_offset[p] + (i_pos * window_dim(out.window(p)) + w) * k_bases[q].size() + j_pos;
  };

  for (std::size_t r = 0; r < top; ++r) {
    RationalMatrix d(layout[r + 1].size, layout[r].size);
    for (std::size_t p = 0; p <= std::min(r, nh); ++p) {
      const std::size_t q = r - p;
      if (q > nk) continue;
      const std::size_t m = out.window(p);
      const int fiber_sign = p % 2 == 0 ? 1 : -1;
      for (std::size_t w = 0; w < window_dim(m); ++w) {
        RationalVector unit(window_dim(m));
        unit[w] = 1;
        const TrigPoly f = TrigPoly::from_window(unit);
        const TrigPoly df = trig_derivative(f);
        for (std::size_t i_pos = 0; i_pos < h_bases[p].size(); ++i_pos) {
          const MultiIndex& I = h_bases[p][i_pos];
          for (std::size_t j_pos = 0; j_pos < k_bases[q].size(); ++j_pos) {
            const std::size_t col = pos(r, p, i_pos, w, j_pos);
            if (p < nh) {
              // Σ_i (φ_i f') e^i ∧ e^I ∧ e^J
              const std::size_t m_next = out.window(p + 1);
              for (std::uint32_t i = 0; i < nh; ++i) {
                if (I.contains(i) || action.phi[i].is_zero() || df.is_zero()) continue;
                const auto sw = wedge(MultiIndex({i}, nh), I);
                const RationalVector coords = trig_mul(action.phi[i], df).window(m_next);
                const std::size_t i_next = h_bases[p + 1].position(sw->index);
                for (std::size_t w2 = 0; w2 < coords.size(); ++w2) {
                  if (coords[w2] != 0) d(pos(r + 1, p + 1, i_next, w2, j_pos), col) += sw->sign * coords[w2];
                }
              }
              // f (d_h e^I) ∧ e^J; V_m sits inside V_{m_next} with the same coordinates
              for (std::size_t row = 0; row < h_bases[p + 1].size(); ++row) {
                const Rational& c = h_forms[p](row, i_pos);
                if (c != 0) d(pos(r + 1, p + 1, row, w, j_pos), col) += c;
              }
            }
            if (q < nk) {
              // (-1)^p f e^I ∧ d_k e^J
              for (std::size_t row = 0; row < k_bases[q + 1].size(); ++row) {
                const Rational& c = k_forms[q](row, j_pos);
                if (c != 0) d(pos(r + 1, p, i_pos, w, row), col) += fiber_sign * c;
              }
            }
          }
        }
      }
    }
    out.complex.differentials.push_back(std::move(d));
  }
  return out;
}

NotStabilizedError::NotStabilizedError(std::vector<SweepEntry> table)
    : Error(ErrorCode::NotStabilized, "Betti numbers differ across the last three windows"),
      table_(std::move(table)) {}

SweepResult truncation_sweep(const CircleAlgebroid& a, std::size_t N_min, std::size_t N_max, RankMethod method) {
  if (N_min == 0 || N_max < N_min)
    throw Error(ErrorCode::ValidationFailed, "sweep range must satisfy 1 <= N_min <= N_max");
  const std::size_t count = N_max - N_min + 1;
  SweepResult result;
  result.table = parallel_map<SweepEntry>(count, [&](std::size_t i) {
    const std::size_t N = N_min + i;
    return SweepEntry{N, complex_cohomology(truncated_complex(a, N).complex, method)};
  });
  result.report = result.table.back().report;
  if (count >= 3) {
    const auto& last = result.table[count - 1].report.betti;
    result.stabilized = result.table[count - 2].report.betti == last && result.table[count - 3].report.betti == last;
  }
  return result;
}

SweepResult stabilized_cohomology(const CircleAlgebroid& a, std::size_t N_min, std::size_t N_max,
                                  RankMethod method) {
  if (N_max < N_min + 2)
    throw Error(ErrorCode::ValidationFailed, "stabilization needs at least three windows (N_max >= N_min + 2)");
  SweepResult result = truncation_sweep(a, N_min, N_max, method);
  if (!result.stabilized) throw NotStabilizedError(std::move(result.table));
  return result;
}

}  // namespace algebroid
