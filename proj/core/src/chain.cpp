#include "wiretap/chain.hpp"

#include <cmath>
#include <stdexcept>

namespace wiretap {

AuxiliaryChain AuxiliaryChain::trivial(const Pmf& px) {
  return AuxiliaryChain{
      Pmf({1.0}),
      ChannelMatrix(1, px.dim(), std::vector<double>(px.weights())),
      ChannelMatrix::identity(px.dim())};
}

AuxiliaryChain AuxiliaryChain::prefix_only(const Pmf& pv,
                                           const std::vector<Pmf>& rows) {
  if (rows.size() != pv.dim())
    throw std::invalid_argument("chain: row count != |V|");
  std::vector<std::vector<double>> x_rows;
  x_rows.reserve(rows.size());
  for (const Pmf& r : rows) x_rows.push_back(r.weights());
  return AuxiliaryChain{
      Pmf({1.0}),
      ChannelMatrix(1, pv.dim(), std::vector<double>(pv.weights())),
      ChannelMatrix::from_rows(x_rows)};
}

AuxiliaryChain AuxiliaryChain::split(
    const Pmf& pu, const std::vector<std::vector<double>>& pv_rows,
    const std::vector<Pmf>& x_rows) {
  if (pv_rows.size() != pu.dim())
    throw std::invalid_argument("chain: pv row count != |U|");
  std::vector<std::vector<double>> xr;
  xr.reserve(x_rows.size());
  for (const Pmf& r : x_rows) xr.push_back(r.weights());
  return AuxiliaryChain{pu, ChannelMatrix::from_rows(pv_rows),
                        ChannelMatrix::from_rows(xr)};
}

void validate(const AuxiliaryChain& chain, std::size_t input_dim) {
  if (chain.px_given_v.out_dim() != input_dim)
    throw std::invalid_argument("chain: input alphabet mismatch");
  if (chain.pv_given_u.in_dim() != chain.pu.dim())
    throw std::invalid_argument("chain: |U| mismatch");
  if (chain.pv_given_u.out_dim() != chain.px_given_v.in_dim())
    throw std::invalid_argument("chain: |V| mismatch");
}

ObjectiveBreakdown evaluate_objective_parts(const WiretapChannel& w,
                                            const AuxiliaryChain& chain,
                                            double mu) {
  validate(chain, w.input_dim());
  const ChannelMatrix vy = compose_prefix(chain.px_given_v, w.main);
  const ChannelMatrix vz = compose_prefix(chain.px_given_v, w.eavesdropper);
  const Pmf pv = chain.induced_v();

  ObjectiveBreakdown parts;
  parts.rate = mutual_information(vy, pv);
  for (std::size_t u = 0; u < chain.card_u(); ++u) {
    const double* r = chain.pv_given_u.row_data(u);
    parts.advantage +=
        chain.pu[u] * (mutual_information(vy, r) - mutual_information(vz, r));
  }
  parts.value = mu * parts.rate + parts.advantage;

  // X-side decomposition of the same quantity.
  const ChannelMatrix ux = compose_prefix(chain.pv_given_u, chain.px_given_v);
  const Pmf px = chain.induced_x();
  double alt = mu * mutual_information(w.main, px);
  for (std::size_t u = 0; u < chain.card_u(); ++u) {
    const double* r = ux.row_data(u);
    alt += chain.pu[u] * (mutual_information(w.main, r) -
                          mutual_information(w.eavesdropper, r));
  }
  for (std::size_t v = 0; v < chain.card_v(); ++v) {
    const double* r = chain.px_given_v.row_data(v);
    alt -= pv[v] * ((mu + 1) * mutual_information(w.main, r) -
                    mutual_information(w.eavesdropper, r));
  }
  if (std::abs(parts.value - alt) > kNumericTol)
    throw std::logic_error("evaluate_objective: evaluation forms disagree");
  return parts;
}

double evaluate_objective(const WiretapChannel& w, const AuxiliaryChain& chain,
                          double mu) {
  return evaluate_objective_parts(w, chain, mu).value;
}

}  // namespace wiretap
