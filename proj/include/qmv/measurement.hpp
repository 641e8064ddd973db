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

#ifndef QMV_MEASUREMENT_HPP
#define QMV_MEASUREMENT_HPP

#include <map>
#include <string>
#include <vector>

#include "qmv/quantum.hpp"

namespace qmv {

/// Assignment of the tensor factors of the final space to named, separately
/// readable channels. Factors not belonging to any channel are listed as
/// unobserved; together they partition the factor list.
class ChannelLayout {
  public:
    struct Channel {
        std::string name;
        std::vector<int> factors;  // ascending
    };

    ChannelLayout() = default;
    ChannelLayout(DimensionLayout layout, std::vector<Channel> channels,
                  std::vector<int> unobserved = {});

    const DimensionLayout& layout() const { return layout_; }
    const std::vector<Channel>& channels() const { return channels_; }
    const std::vector<int>& unobserved() const { return unobserved_; }

    bool has_channel(const std::string& name) const;
    const Channel& channel(const std::string& name) const;
    /// Product of the channel's factor dimensions.
    int channel_dim(const std::string& name) const;
    std::vector<std::string> channel_names() const;

    /// Merge the named channels into one combined channel. A coincidence
    /// reading on the group is then a single reading on the merged factors.
    ChannelLayout grouped(const std::vector<std::string>& names,
                          const std::string& new_name) const;

  private:
    DimensionLayout layout_;
    std::vector<Channel> channels_;
    std::vector<int> unobserved_;
};

/// A measurement as a unitary dilation: the object (factor 0) meets a probe
/// prepared in probe_state, the pair evolves by the unitary s, and the final
/// factors are grouped into channels. All coincidence statistics derive from
/// this data.
class MeasurementModel {
  public:
    MeasurementModel(int object_dim, DensityOperator probe_state, ComplexMatrix s,
                     ChannelLayout channel_layout, const ToleranceConfig& tol = {});

    /// Skips the unitarity check; for negative controls that deliberately
    /// break the model.
    static MeasurementModel unchecked(int object_dim, DensityOperator probe_state,
                                      ComplexMatrix s, ChannelLayout channel_layout);

    int object_dim() const { return object_dim_; }
    int probe_dim() const { return probe_state_.dim(); }
    int total_dim() const { return static_cast<int>(s_.rows()); }
    const DensityOperator& probe_state() const { return probe_state_; }
    const ComplexMatrix& unitary() const { return s_; }
    const ChannelLayout& channel_layout() const { return channel_layout_; }

  private:
    MeasurementModel() = default;
    int object_dim_ = 0;
    DensityOperator probe_state_{identity(1)};
    ComplexMatrix s_;
    ChannelLayout channel_layout_;
};

/// Readings for a subset of channels: one effect per named channel, acting
/// on that channel's factor subspace.
struct ReadingSet {
    std::map<std::string, Effect> readings;

    bool contains(const std::string& channel) const { return readings.count(channel) > 0; }
    ReadingSet with(const std::string& channel, Effect e) const;
    ReadingSet without(const std::string& channel) const;
};

/// Joint distribution of the outcome bits of a set of channel readings,
/// tuple components ordered lexicographically by channel name.
struct CoincidenceDistribution {
    std::vector<std::string> channels;
    std::vector<double> probabilities;  ///< index bit (msb = channels[0]) = outcome

    int tuple_count() const { return static_cast<int>(probabilities.size()); }
    /// Outcome bit of channels[pos] in tuple `index`.
    static int outcome_bit(int index, int pos, int num_channels);
    double probability_of(const std::vector<int>& outcomes) const;
};

/// Residual maxima of the defining properties of the coincidence functional,
/// estimated on seeded random (state, readings) tuples.
struct AxiomReport {
    double normalization = 0.0;         ///< empty reading must give 1
    double bounds = 0.0;                ///< breach of [0, 1]
    double state_affinity = 0.0;        ///< convex linearity in the state
    double observable_linearity = 0.0;  ///< linearity in final-space observables
    double separability = 0.0;          ///< reading-and-ignoring == not reading
    double marginal_independence = 0.0; ///< marginal free of the other reading
    double reading_linearity = 0.0;     ///< linearity in each channel reading
    double monotonicity = 0.0;          ///< coincidence may not exceed marginal
    int samples = 0;
    bool pair_checks_run = false;       ///< false when fewer than 2 channels

    std::map<std::string, double> as_map() const;
    /// Largest residual and its axiom name.
    std::pair<std::string, double> worst() const;
    bool pass(const ToleranceConfig& tol) const;
};

// --------------------------------------------------------------------------
// Evolution and the coincidence functional
// --------------------------------------------------------------------------

/// S (x tensor probe) S+ on the full final space.
DensityOperator final_state(const MeasurementModel& model, const DensityOperator& x,
                            const ToleranceConfig& tol = {});

/// The readings assembled into one effect on the total space (identity on
/// unread factors).
Effect total_reading_effect(const MeasurementModel& model, const ReadingSet& readings,
                            const ToleranceConfig& tol = {});

/// m({A^mu}; X): probability that every selected channel reading fires at
/// once. The empty reading set gives 1 for every state.
double coincidence_probability(const MeasurementModel& model, const ReadingSet& readings,
                               const DensityOperator& x, const ToleranceConfig& tol = {});

/// Same, against a precomputed final state (for sweeps).
double coincidence_on_final(const MeasurementModel& model, const ReadingSet& readings,
                            const DensityOperator& fin, const ToleranceConfig& tol = {});

/// Joint outcome distribution over the read channels: each tuple's
/// probability is the coincidence of the readings with e=0 channels
/// complemented. Nonnegative and normalized.
CoincidenceDistribution coincidence_distribution(const MeasurementModel& model,
                                                 const ReadingSet& readings,
                                                 const DensityOperator& x,
                                                 const ToleranceConfig& tol = {});

/// Checks normalization, bounds, affinity in the state, linearity in
/// observables and readings, separability, marginal independence and
/// coincidence monotonicity on `samples` random tuples.
AxiomReport verify_axioms(const MeasurementModel& model, int samples, std::uint64_t seed,
                          const ToleranceConfig& tol = {});

/// The object-space observable F with (F, X) = m({A^mu}; X) for every state:
/// the Heisenberg-picture pullback of the total reading effect, compressed
/// against the probe state. Validated internally on a spanning set of object
/// states.
Effect induced_effect(const MeasurementModel& model, const ReadingSet& readings,
                      const ToleranceConfig& tol = {});

/// State prepared on channel `out` when no selection is made: the reduction
/// of the final state to that channel. Satisfies (A, result) = m(A; x) for
/// every reading A of the channel.
DensityOperator output_state(const MeasurementModel& model, const std::string& out,
                             const DensityOperator& x, const ToleranceConfig& tol = {});

/// State prepared on channel `out` conditional on the reading `a_sel` of a
/// different selection channel firing: compress the final state by sqrt(a_sel),
/// reduce, renormalize. Satisfies (A, result) = m(A, a_sel; x) / m(a_sel; x).
/// Throws DegenerateSelectionError when the selection probability is below
/// tol.sel.
DensityOperator conditional_output_state(const MeasurementModel& model, const std::string& out,
                                         const std::string& selection, const Effect& a_sel,
                                         const DensityOperator& x,
                                         const ToleranceConfig& tol = {});

// --------------------------------------------------------------------------
// Structural operations
// --------------------------------------------------------------------------

/// Perform `second` on one channel of `first`: the channel's factors act as
/// the second measurement's object, fresh factors carry its probe. The
/// second model's probe channels join the composite under `fresh_names`
/// (one per probe channel of `second`, in order).
MeasurementModel compose_measurement(const MeasurementModel& first, const std::string& channel,
                                     const MeasurementModel& second,
                                     const std::vector<std::string>& fresh_names,
                                     const ToleranceConfig& tol = {});

/// Model with the named channels merged into one combined channel.
MeasurementModel group_channels(const MeasurementModel& model,
                                const std::vector<std::string>& names,
                                const std::string& new_name);

}  // namespace qmv

#endif
