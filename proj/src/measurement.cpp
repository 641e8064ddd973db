// Copyright 2026 The qmv authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmv/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

namespace qmv {

// ---------------------------------------------------------------------------
// ChannelLayout
// ---------------------------------------------------------------------------

ChannelLayout::ChannelLayout(DimensionLayout layout, std::vector<Channel> channels,
                             std::vector<int> unobserved)
    : layout_(std::move(layout)), channels_(std::move(channels)),
      unobserved_(std::move(unobserved)) {
    std::vector<bool> seen(static_cast<size_t>(layout_.num_factors()), false);
    auto claim = [&](int f, const std::string& owner) {
        if (f < 0 || f >= layout_.num_factors()) {
            throw DimensionError("ChannelLayout: factor index out of range in " + owner);
        }
        if (seen[static_cast<size_t>(f)]) {
            throw DimensionError("ChannelLayout: factor " + std::to_string(f) +
                                 " claimed twice (" + owner + ")");
        }
        seen[static_cast<size_t>(f)] = true;
    };
    std::set<std::string> names;
    for (auto& ch : channels_) {
        if (ch.factors.empty()) {
            throw DimensionError("ChannelLayout: channel '" + ch.name + "' has no factors");
        }
        if (!names.insert(ch.name).second) {
            throw DimensionError("ChannelLayout: duplicate channel name '" + ch.name + "'");
        }
        std::sort(ch.factors.begin(), ch.factors.end());
        for (int f : ch.factors) {
            claim(f, ch.name);
        }
    }
    for (int f : unobserved_) {
        claim(f, "unobserved");
    }
    for (int f = 0; f < layout_.num_factors(); ++f) {
        if (!seen[static_cast<size_t>(f)]) {
            throw DimensionError("ChannelLayout: factor " + std::to_string(f) +
                                 " not assigned to a channel or listed unobserved");
        }
    }
}

bool ChannelLayout::has_channel(const std::string& name) const {
    for (const auto& ch : channels_) {
        if (ch.name == name) {
            return true;
        }
    }
    return false;
}

const ChannelLayout::Channel& ChannelLayout::channel(const std::string& name) const {
    for (const auto& ch : channels_) {
        if (ch.name == name) {
            return ch;
        }
    }
    throw DimensionError("ChannelLayout: unknown channel '" + name + "'");
}

int ChannelLayout::channel_dim(const std::string& name) const {
    int d = 1;
    for (int f : channel(name).factors) {
        d *= layout_.factor_dim(f);
    }
    return d;
}

std::vector<std::string> ChannelLayout::channel_names() const {
    std::vector<std::string> names;
    names.reserve(channels_.size());
    for (const auto& ch : channels_) {
        names.push_back(ch.name);
    }
    return names;
}

ChannelLayout ChannelLayout::grouped(const std::vector<std::string>& names,
                                     const std::string& new_name) const {
    if (names.size() < 2) {
        throw DimensionError("grouped: need at least two channels to merge");
    }
    Channel merged{new_name, {}};
    std::vector<Channel> rest;
    std::set<std::string> to_merge(names.begin(), names.end());
    for (const auto& ch : channels_) {
        if (to_merge.count(ch.name)) {
            merged.factors.insert(merged.factors.end(), ch.factors.begin(), ch.factors.end());
            to_merge.erase(ch.name);
        } else {
            rest.push_back(ch);
        }
    }
    if (!to_merge.empty()) {
        throw DimensionError("grouped: unknown channel '" + *to_merge.begin() + "'");
    }
    std::sort(merged.factors.begin(), merged.factors.end());
    rest.push_back(merged);
    return ChannelLayout(layout_, rest, unobserved_);
}

// ---------------------------------------------------------------------------
// MeasurementModel
// ---------------------------------------------------------------------------

MeasurementModel::MeasurementModel(int object_dim, DensityOperator probe_state, ComplexMatrix s,
                                   ChannelLayout channel_layout, const ToleranceConfig& tol)
    : object_dim_(object_dim), probe_state_(std::move(probe_state)), s_(std::move(s)),
      channel_layout_(std::move(channel_layout)) {
    if (object_dim_ < 1) {
        throw DimensionError("MeasurementModel: object dimension must be positive");
    }
    if (s_.rows() != s_.cols() || s_.rows() != object_dim_ * probe_state_.dim()) {
        std::ostringstream msg;
        msg << "MeasurementModel: unitary is " << s_.rows() << "x" << s_.cols()
            << " but object x probe spans " << object_dim_ * probe_state_.dim();
        throw DimensionError(msg.str());
    }
    channel_layout_.layout().check_matches(s_, "MeasurementModel");
    if (channel_layout_.layout().factor_dim(0) != object_dim_) {
        throw DimensionError("MeasurementModel: factor 0 must carry the object");
    }
    double defect = unitarity_defect(s_);
    if (defect > tol.recon) {
        std::ostringstream msg;
        msg << "MeasurementModel: evolution not unitary (||S S+ - I||_F = " << defect << ")";
        throw PreconditionError(msg.str());
    }
}

MeasurementModel MeasurementModel::unchecked(int object_dim, DensityOperator probe_state,
                                             ComplexMatrix s, ChannelLayout channel_layout) {
    MeasurementModel m;
    m.object_dim_ = object_dim;
    m.probe_state_ = std::move(probe_state);
    m.s_ = std::move(s);
    m.channel_layout_ = std::move(channel_layout);
    return m;
}

ReadingSet ReadingSet::with(const std::string& channel, Effect e) const {
    ReadingSet r = *this;
    r.readings.insert_or_assign(channel, std::move(e));
    return r;
}

ReadingSet ReadingSet::without(const std::string& channel) const {
    ReadingSet r = *this;
    r.readings.erase(channel);
    return r;
}

int CoincidenceDistribution::outcome_bit(int index, int pos, int num_channels) {
    return (index >> (num_channels - 1 - pos)) & 1;
}

double CoincidenceDistribution::probability_of(const std::vector<int>& outcomes) const {
    if (outcomes.size() != channels.size()) {
        throw DimensionError("CoincidenceDistribution: outcome tuple has wrong arity");
    }
    int index = 0;
    for (int e : outcomes) {
        index = (index << 1) | (e ? 1 : 0);
    }
    return probabilities[static_cast<size_t>(index)];
}

// ---------------------------------------------------------------------------
// Evolution and the coincidence functional
// ---------------------------------------------------------------------------

namespace {

void check_object_dim(const MeasurementModel& model, const DensityOperator& x) {
    if (x.dim() != model.object_dim()) {
        std::ostringstream msg;
        msg << "measurement: state dimension " << x.dim() << " != object dimension "
            << model.object_dim();
        throw DimensionError(msg.str());
    }
}

// Raw evolution, no state validation. verify_axioms goes through this so a
// deliberately corrupted model shows up as an axiom breach instead of a
// constructor failure.
ComplexMatrix final_matrix(const MeasurementModel& model, const ComplexMatrix& x) {
    ComplexMatrix initial = tensor(x, model.probe_state().matrix());
    return model.unitary() * initial * model.unitary().adjoint();
}

ComplexMatrix reading_matrix(const MeasurementModel& model, const ReadingSet& readings) {
    const auto& cl = model.channel_layout();
    std::map<std::vector<int>, ComplexMatrix> ops;
    for (const auto& [name, effect] : readings.readings) {
        const auto& ch = cl.channel(name);
        if (effect.dim() != cl.channel_dim(name)) {
            std::ostringstream msg;
            msg << "reading on '" << name << "' has dimension " << effect.dim()
                << ", channel spans " << cl.channel_dim(name);
            throw DimensionError(msg.str());
        }
        ops.emplace(ch.factors, effect.matrix());
    }
    if (ops.empty()) {
        return identity(model.total_dim());
    }
    return embed_product(ops, cl.layout());
}

double m_raw(const MeasurementModel& model, const ReadingSet& readings,
             const ComplexMatrix& fin) {
    return (reading_matrix(model, readings) * fin).trace().real();
}

}  // namespace

DensityOperator final_state(const MeasurementModel& model, const DensityOperator& x,
                            const ToleranceConfig& tol) {
    check_object_dim(model, x);
    ComplexMatrix fin = final_matrix(model, x.matrix());
    fin = 0.5 * (fin + fin.adjoint().eval());
    return DensityOperator(fin, tol);
}

Effect total_reading_effect(const MeasurementModel& model, const ReadingSet& readings,
                            const ToleranceConfig& tol) {
    return Effect(reading_matrix(model, readings), tol);
}

double coincidence_on_final(const MeasurementModel& model, const ReadingSet& readings,
                            const DensityOperator& fin, const ToleranceConfig& tol) {
    if (fin.dim() != model.total_dim()) {
        throw DimensionError("coincidence_on_final: state not on the total space");
    }
    (void)tol;
    return m_raw(model, readings, fin.matrix());
}

double coincidence_probability(const MeasurementModel& model, const ReadingSet& readings,
                               const DensityOperator& x, const ToleranceConfig& tol) {
    check_object_dim(model, x);
    (void)tol;
    return m_raw(model, readings, final_matrix(model, x.matrix()));
}

CoincidenceDistribution coincidence_distribution(const MeasurementModel& model,
                                                 const ReadingSet& readings,
                                                 const DensityOperator& x,
                                                 const ToleranceConfig& tol) {
    if (readings.readings.empty()) {
        throw PreconditionError("coincidence_distribution: at least one reading required");
    }
    check_object_dim(model, x);
    ComplexMatrix fin = final_matrix(model, x.matrix());

    CoincidenceDistribution dist;
    for (const auto& [name, effect] : readings.readings) {
        dist.channels.push_back(name);  // std::map iterates in lexicographic order
    }
    const int k = static_cast<int>(dist.channels.size());
    const int tuples = 1 << k;
    dist.probabilities.resize(static_cast<size_t>(tuples));

    double sum = 0.0;
    for (int t = 0; t < tuples; ++t) {
        ReadingSet flipped;
        for (int pos = 0; pos < k; ++pos) {
            const auto& name = dist.channels[static_cast<size_t>(pos)];
            const Effect& a = readings.readings.at(name);
            flipped.readings.emplace(
                name, CoincidenceDistribution::outcome_bit(t, pos, k) ? a : complement(a, tol));
        }
        double p = m_raw(model, flipped, fin);
        dist.probabilities[static_cast<size_t>(t)] = p;
        if (p < -tol.psd) {
            std::ostringstream msg;
            msg << "coincidence_distribution: negative probability " << p;
            throw PreconditionError(msg.str());
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol.prob) {
        std::ostringstream msg;
        msg << "coincidence_distribution: probabilities sum to " << sum;
        throw PreconditionError(msg.str());
    }
    return dist;
}

// ---------------------------------------------------------------------------
// Axiom verification
// ---------------------------------------------------------------------------

std::map<std::string, double> AxiomReport::as_map() const {
    return {
        {"normalization", normalization},
        {"bounds", bounds},
        {"state_affinity", state_affinity},
        {"observable_linearity", observable_linearity},
        {"separability", separability},
        {"marginal_independence", marginal_independence},
        {"reading_linearity", reading_linearity},
        {"monotonicity", monotonicity},
    };
}

std::pair<std::string, double> AxiomReport::worst() const {
    std::pair<std::string, double> w{"normalization", -1.0};
    for (const auto& [name, value] : as_map()) {
        if (value > w.second) {
            w = {name, value};
        }
    }
    return w;
}

bool AxiomReport::pass(const ToleranceConfig& tol) const {
    return normalization <= tol.prob && bounds <= tol.prob && state_affinity <= tol.prob &&
           observable_linearity <= tol.prob && separability <= tol.prob &&
           marginal_independence <= tol.prob && reading_linearity <= tol.prob &&
           monotonicity <= tol.psd;
}

AxiomReport verify_axioms(const MeasurementModel& model, int samples, std::uint64_t seed,
                          const ToleranceConfig& tol) {
    AxiomReport report;
    report.samples = samples;
    const auto names = model.channel_layout().channel_names();
    const int num_channels = static_cast<int>(names.size());
    report.pair_checks_run = num_channels >= 2;

    Rng parent(seed);
    for (int sample = 0; sample < samples; ++sample) {
        Rng rng = parent.substream(static_cast<std::uint64_t>(sample));

        DensityOperator xa = random_density_operator(model.object_dim(), rng, tol);
        DensityOperator xb = random_density_operator(model.object_dim(), rng, tol);
        double wgt = rng.uniform();

        ReadingSet all_a, all_b;
        for (const auto& name : names) {
            int d = model.channel_layout().channel_dim(name);
            all_a.readings.emplace(name, random_effect(d, rng, tol));
            all_b.readings.emplace(name, random_effect(d, rng, tol));
        }

        ComplexMatrix fa = final_matrix(model, xa.matrix());
        ComplexMatrix fb = final_matrix(model, xb.matrix());
        ComplexMatrix fmix = wgt * fa + (1.0 - wgt) * fb;

        // Normalization: the empty reading set is the unit observable.
        report.normalization =
            std::max(report.normalization, std::abs(fa.trace().real() - 1.0));

        // Bounds, on the all-channel coincidence and on a random total effect.
        Effect a_tot = random_effect(model.total_dim(), rng, tol);
        double m_all = m_raw(model, all_a, fa);
        double m_tot = (a_tot.matrix() * fa).trace().real();
        for (double m : {m_all, m_tot}) {
            report.bounds = std::max({report.bounds, -m, m - 1.0});
        }

        // Affinity in the state.
        double lhs = m_raw(model, all_a, fmix);
        double rhs = wgt * m_all + (1.0 - wgt) * m_raw(model, all_a, fb);
        report.state_affinity = std::max(report.state_affinity, std::abs(lhs - rhs));

        // Linearity in final-space observables: a convex combination of the
        // coincidence effect with an arbitrary total effect.
        {
            double alpha = rng.uniform();
            ComplexMatrix e_all = reading_matrix(model, all_a);
            ComplexMatrix combo = alpha * e_all + (1.0 - alpha) * a_tot.matrix();
            double combined = (combo * fa).trace().real();
            double split = alpha * m_all + (1.0 - alpha) * m_tot;
            report.observable_linearity =
                std::max(report.observable_linearity, std::abs(combined - split));
        }

        if (report.pair_checks_run) {
            int i = std::min(static_cast<int>(rng.uniform() * num_channels), num_channels - 1);
            int j = std::min(static_cast<int>(rng.uniform() * (num_channels - 1)),
                             num_channels - 2);
            if (j >= i) {
                ++j;
            }
            const std::string& mu = names[static_cast<size_t>(i)];
            const std::string& nu = names[static_cast<size_t>(j)];
            const Effect& a_mu = all_a.readings.at(mu);
            const Effect& a_nu = all_a.readings.at(nu);
            const Effect& b_nu = all_b.readings.at(nu);

            ReadingSet only_mu;
            only_mu.readings.emplace(mu, a_mu);
            double marginal = m_raw(model, only_mu, fa);
            double both = m_raw(model, only_mu.with(nu, a_nu), fa);
            double other = m_raw(model, only_mu.with(nu, complement(a_nu, tol)), fa);
            report.separability =
                std::max(report.separability, std::abs(both + other - marginal));

            // The marginal reassembled over an unrelated second reading must
            // come out the same.
            double marg_b = m_raw(model, only_mu.with(nu, b_nu), fa) +
                            m_raw(model, only_mu.with(nu, complement(b_nu, tol)), fa);
            report.marginal_independence =
                std::max(report.marginal_independence, std::abs((both + other) - marg_b));

            report.monotonicity = std::max(report.monotonicity, both - marginal);

            // Linearity in the reading of one channel, another channel fixed.
            double alpha = rng.uniform();
            Effect combo_nu(alpha * a_nu.matrix() + (1.0 - alpha) * b_nu.matrix(), tol);
            double combined = m_raw(model, only_mu.with(nu, combo_nu), fa);
            double split = alpha * both + (1.0 - alpha) * m_raw(model, only_mu.with(nu, b_nu), fa);
            report.reading_linearity =
                std::max(report.reading_linearity, std::abs(combined - split));
        } else {
            // Single channel: linearity in its reading alone.
            const std::string& mu = names.front();
            double alpha = rng.uniform();
            const Effect& a_mu = all_a.readings.at(mu);
            const Effect& b_mu = all_b.readings.at(mu);
            ReadingSet ra, rb, rc;
            ra.readings.emplace(mu, a_mu);
            rb.readings.emplace(mu, b_mu);
            rc.readings.emplace(mu,
                                Effect(alpha * a_mu.matrix() + (1.0 - alpha) * b_mu.matrix(), tol));
            double combined = m_raw(model, rc, fa);
            double split = alpha * m_raw(model, ra, fa) + (1.0 - alpha) * m_raw(model, rb, fa);
            report.reading_linearity =
                std::max(report.reading_linearity, std::abs(combined - split));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Induced observable and prepared states
// ---------------------------------------------------------------------------

Effect induced_effect(const MeasurementModel& model, const ReadingSet& readings,
                      const ToleranceConfig& tol) {
    const DimensionLayout& layout = model.channel_layout().layout();
    ComplexMatrix e_tot = reading_matrix(model, readings);
    // Heisenberg-picture pullback of the reading, compressed on the probe.
    ComplexMatrix g = model.unitary().adjoint() * e_tot * model.unitary();
    ComplexMatrix weighted = g * tensor(identity(model.object_dim()),
                                        model.probe_state().matrix());
    std::set<int> keep_object{0};
    // Factor 0 carries the object; tracing the probe factors against the
    // probe state leaves the induced object observable.
    DimensionLayout obj_probe({model.object_dim(), model.probe_dim()});
    ComplexMatrix f = partial_trace(weighted, obj_probe, keep_object);
    f = 0.5 * (f + f.adjoint().eval());
    Effect induced(f, tol);

    // The defining identity, verified on a spanning set of object states.
    const int d = model.object_dim();
    auto check_state = [&](const ComplexVector& v) {
        DensityOperator x(projector(v), tol);
        double via_effect = probability(induced, x);
        double via_model = coincidence_probability(model, readings, x, tol);
        if (std::abs(via_effect - via_model) > tol.prob) {
            std::ostringstream msg;
            msg << "induced_effect: defining identity violated by " << via_effect - via_model;
            throw Error(msg.str());
        }
    };
    for (int i = 0; i < d; ++i) {
        check_state(basis_ket(d, i));
        for (int j = i + 1; j < d; ++j) {
            check_state(basis_ket(d, i) + basis_ket(d, j));
            check_state(basis_ket(d, i) + Complex(0.0, 1.0) * basis_ket(d, j));
        }
    }
    return induced;
}

DensityOperator output_state(const MeasurementModel& model, const std::string& out,
                             const DensityOperator& x, const ToleranceConfig& tol) {
    check_object_dim(model, x);
    const auto& ch = model.channel_layout().channel(out);
    ComplexMatrix fin = final_matrix(model, x.matrix());
    std::set<int> keep(ch.factors.begin(), ch.factors.end());
    ComplexMatrix red = partial_trace(fin, model.channel_layout().layout(), keep);
    red = 0.5 * (red + red.adjoint().eval());
    return DensityOperator(red, tol);
}

DensityOperator conditional_output_state(const MeasurementModel& model, const std::string& out,
                                         const std::string& selection, const Effect& a_sel,
                                         const DensityOperator& x, const ToleranceConfig& tol) {
    check_object_dim(model, x);
    if (out == selection) {
        throw PreconditionError("conditional_output_state: output and selection channels equal");
    }
    const auto& cl = model.channel_layout();
    const auto& sel_ch = cl.channel(selection);
    if (a_sel.dim() != cl.channel_dim(selection)) {
        throw DimensionError("conditional_output_state: selection reading has wrong dimension");
    }
    ComplexMatrix fin = final_matrix(model, x.matrix());
    ComplexMatrix root = embed(psd_sqrt(a_sel.matrix(), tol), cl.layout(), sel_ch.factors);
    ComplexMatrix compressed = root * fin * root.adjoint();
    double p = compressed.trace().real();
    if (p <= tol.sel) {
        std::ostringstream msg;
        msg << "conditional_output_state: selection probability " << p << " is numerically null";
        throw DegenerateSelectionError(msg.str());
    }
    const auto& out_ch = cl.channel(out);
    std::set<int> keep(out_ch.factors.begin(), out_ch.factors.end());
    ComplexMatrix red = partial_trace(compressed, cl.layout(), keep) / p;
    red = 0.5 * (red + red.adjoint().eval());
    return DensityOperator(red, tol);
}

// ---------------------------------------------------------------------------
// Structural operations
// ---------------------------------------------------------------------------

MeasurementModel compose_measurement(const MeasurementModel& first, const std::string& channel,
                                     const MeasurementModel& second,
                                     const std::vector<std::string>& fresh_names,
                                     const ToleranceConfig& tol) {
    const auto& cl = first.channel_layout();
    const auto& src = cl.channel(channel);
    if (second.object_dim() != cl.channel_dim(channel)) {
        std::ostringstream msg;
        msg << "compose_measurement: channel '" << channel << "' spans "
            << cl.channel_dim(channel) << " but the second model expects object dimension "
            << second.object_dim();
        throw DimensionError(msg.str());
    }

    const DimensionLayout& second_layout = second.channel_layout().layout();
    const int first_factors = cl.layout().num_factors();

    std::vector<int> dims = cl.layout().factor_dims();
    std::vector<int> second_probe_factors;  // in second's indexing, excluding its object
    for (int f = 1; f < second_layout.num_factors(); ++f) {
        dims.push_back(second_layout.factor_dim(f));
        second_probe_factors.push_back(f);
    }
    DimensionLayout new_layout(dims);

    auto remap = [&](int second_factor) {
        return first_factors + second_factor - 1;
    };

    // The second unitary acts on the reused channel's factors plus the fresh
    // probe factors appended at the end.
    std::vector<int> second_support = src.factors;
    for (int f : second_probe_factors) {
        second_support.push_back(remap(f));
    }
    ComplexMatrix probe2 = identity(1);
    for (size_t i = 0; i < second_probe_factors.size(); ++i) {
        probe2 = tensor(probe2, identity(second_layout.factor_dim(second_probe_factors[i])));
    }
    ComplexMatrix s_new = embed(second.unitary(), new_layout, second_support) *
                          tensor(first.unitary(), probe2);

    DensityOperator probe_new(
        tensor(first.probe_state().matrix(), second.probe_state().matrix()), tol);

    // First model's channels survive; the second model's probe channels join
    // under the fresh names.
    std::vector<ChannelLayout::Channel> channels = cl.channels();
    size_t name_index = 0;
    for (const auto& ch2 : second.channel_layout().channels()) {
        bool probe_only = true;
        for (int f : ch2.factors) {
            if (f == 0) {
                probe_only = false;
            }
        }
        if (!probe_only) {
            continue;  // the second object is the reused channel, already present
        }
        if (name_index >= fresh_names.size()) {
            throw DimensionError("compose_measurement: not enough fresh channel names");
        }
        ChannelLayout::Channel mapped{fresh_names[name_index++], {}};
        for (int f : ch2.factors) {
            mapped.factors.push_back(remap(f));
        }
        channels.push_back(mapped);
    }
    if (name_index != fresh_names.size()) {
        throw DimensionError("compose_measurement: too many fresh channel names");
    }

    std::vector<int> unobserved = cl.unobserved();
    for (int f : second.channel_layout().unobserved()) {
        unobserved.push_back(remap(f));
    }

    return MeasurementModel(first.object_dim(), probe_new, s_new,
                            ChannelLayout(new_layout, channels, unobserved), tol);
}

MeasurementModel group_channels(const MeasurementModel& model,
                                const std::vector<std::string>& names,
                                const std::string& new_name) {
    return MeasurementModel::unchecked(model.object_dim(), model.probe_state(), model.unitary(),
                                       model.channel_layout().grouped(names, new_name));
}

}  // namespace qmv
