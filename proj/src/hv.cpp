#include "leggett/hv.hpp"

#include <cmath>
#include <sstream>

namespace leggett::hv {

double malus_marginal(Setting u, Setting a, Kind kind) {
    return std::cos(kind_factor(kind) * (a.angle - u.angle));
}

double malus_transmission(Setting u, Setting a, Kind kind) {
    const double half = kind_factor(kind) * (a.angle - u.angle) / 2.0;
    const double c = std::cos(half);
    return c * c;
}

JointDistribution<double> malus_product_joint(const MalusProductModel& model,
                                              const SettingPair& pair) {
    const double plus1 = malus_transmission(model.u, pair.a, model.kind);
    const double plus2 = malus_transmission(model.v, pair.b, model.kind);
    const double minus1 = 1.0 - plus1;
    const double minus2 = 1.0 - plus2;
    return validate_distribution<double>(
        {plus1 * plus2, plus1 * minus2, minus1 * plus2, minus1 * minus2}, pair);
}

MixedSummary mix_summaries(const JointDistribution<double>& marginal_src,
                           const std::string& marginal_desc,
                           const JointDistribution<double>& correlation_src,
                           const std::string& correlation_desc) {
    const CorrelatorSummary<double> marginals = summarize(marginal_src);
    const CorrelatorSummary<double> correlation = summarize(correlation_src);
    MixedSummary mixed;
    mixed.summary = {marginals.mean_a, marginals.mean_b, correlation.corr,
                     Provenance::mixed};
    mixed.marginal_source = marginal_desc;
    mixed.correlation_source = correlation_desc;
    return mixed;
}

MixedSummary mixed_triple(const MalusProductModel& marginal_model,
                          const SettingPair& marginal_settings,
                          const quantum::TwoQubitState& correlation_state,
                          const SettingPair& correlation_settings) {
    if (!(marginal_settings == correlation_settings)) {
        std::ostringstream msg;
        msg << "marginal source settings (a=" << marginal_settings.a.angle
            << ", b=" << marginal_settings.b.angle << ") differ from correlation source"
            << " settings (a=" << correlation_settings.a.angle
            << ", b=" << correlation_settings.b.angle << ")";
        throw SettingMismatch(msg.str());
    }

    std::ostringstream marginal_desc;
    marginal_desc << "malus-product(u=" << marginal_model.u.angle
                  << ", v=" << marginal_model.v.angle << ", "
                  << kind_name(marginal_model.kind) << ") at (a=" << marginal_settings.a.angle
                  << ", b=" << marginal_settings.b.angle << ")";
    std::ostringstream correlation_desc;
    correlation_desc << "born(" << kind_name(correlation_state.kind())
                     << " state) at (a=" << correlation_settings.a.angle
                     << ", b=" << correlation_settings.b.angle << ")";

    return mix_summaries(malus_product_joint(marginal_model, marginal_settings),
                         marginal_desc.str(),
                         quantum::born_joint(correlation_state, correlation_settings),
                         correlation_desc.str());
}

} // namespace leggett::hv
