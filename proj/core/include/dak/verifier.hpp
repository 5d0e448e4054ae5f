// Copyright 2026 The dak Authors.
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

#pragma once

#include <span>

#include "dak/instance.hpp"
#include "dak/mechanism.hpp"

// Exhaustive certification of incentive properties on concrete instances.
//
// Quantifiers over continuous bids are finitized to the probe set
// CheckConfig::probe_bids(): the grid, 0, the midpoint of every pair of
// consecutive values, and one value above the maximum. For
// comparison-based policies with exact arithmetic this probe set is
// outcome-complete — the mechanism outcome is constant between
// consecutive candidate bids — so a pass is a certificate at desk scale,
// not a sample. Policies that are not comparison-based cannot be
// certified by this verifier.
//
// All checks use exact arithmetic; there are no tolerances anywhere.
//
// Enumeration order is fixed and documented so the first violation found
// is canonical regardless of scheduling: buyers ascending, diffusion
// subsets as an ascending binary counter over the sorted neighbor list
// (all_subsets), probe bids ascending, nil last; instances by index.

namespace dak::verifier {

enum class Property {
  P1,             // value-monotonic allocation
  P2,             // bid-independent decoupled payments
  P3,             // win minus lose payment equals the critical bid
  P4,             // diffusion-monotonic decoupled payments
  P5,             // lose payment under empty diffusion is nonpositive
  IC,             // no profitable deviation from truthful full diffusion
  IR,             // truthful bidding never yields negative utility
  BudgetBalance,  // revenue is nonnegative
  AllocMonotonic, // winning survives higher bid and smaller diffusion
  RevenueDominance,
  Feasibility,    // at most one winner, and the winner participates
  CriticalBidMonotonic,  // smaller diffusion never raises the critical bid
};

std::string_view to_string(Property p);

struct CheckConfig {
  std::vector<Money> bid_grid;       // sorted, distinct, nonnegative
  bool include_midpoints = true;
  int neighbor_subset_cap = 12;

  /// The full probe set (see file comment). Validates the grid.
  std::vector<Money> probe_bids() const;
  void validate() const;
};

/// A reproducible counterexample. The report fields mean different things
/// per property (see `detail`): for IC, baseline is the truthful report
/// and deviation the profitable one; for IR the deviation is the
/// truthful-bid report with negative utility; for P1/AllocMonotonic the
/// buyer wins with baseline and loses with deviation; for P2/P4 the two
/// reports whose decoupled payments compare wrongly. Money fields carry
/// the two compared quantities. Replaying through replay_witness
/// reproduces the violated inequality exactly.
struct Witness {
  Property property{};
  std::optional<std::size_t> instance_index;  // filled by batch runs
  BuyerId buyer = -1;
  Report baseline;
  Report deviation;
  Money baseline_value{};
  Money deviation_value{};
  std::string detail;
};

struct PropertyReport {
  Property property{};
  bool holds = true;
  std::int64_t checked = 0;
  std::optional<Witness> witness;
};

/// P1: fixing a diffusion subset, raising the bid never turns a win into
/// a loss. Scans every buyer, every subset of her neighbors, every probe
/// bid ascending, against the others' truthful play.
PropertyReport check_value_monotonic(const AllocationPolicy& policy, const Instance& instance,
                                     const CheckConfig& config);

/// Winning is preserved under "higher bid, weakly smaller diffusion":
/// every comparable pair of (probe bid, subset) reports is checked, with
/// the others' effective profile recomputed for each diffusion choice.
PropertyReport check_alloc_monotonic(const AllocationPolicy& policy, const Instance& instance,
                                     const CheckConfig& config);

/// No buyer can strictly gain over truthful full diffusion by any
/// (probe bid, subset) report or by staying out. The grid must contain
/// every true valuation so the truthful report is itself in the probe
/// set. Other buyers keep their truthful strategy; whoever the deviation
/// cuts off drops out through the diffusion closure.
PropertyReport check_ic(const AllocationPolicy& policy, const PaymentRule& payment,
                        const Instance& instance, const CheckConfig& config);

/// At her true valuation, a buyer's utility is nonnegative for every
/// diffusion subset she may choose.
PropertyReport check_ir(const AllocationPolicy& policy, const PaymentRule& payment,
                        const Instance& instance, const CheckConfig& config);

/// P2 (bid-independence), P3 (win minus lose equals the critical bid,
/// whenever finite), P4 (both decoupled payments weakly decrease as the
/// diffusion set grows), P5 (lose payment at empty diffusion <= 0),
/// returned in that order.
std::vector<PropertyReport> check_decoupled_properties(const AllocationPolicy& policy,
                                                       const PaymentRule& payment,
                                                       const Instance& instance,
                                                       const CheckConfig& config);

/// The winner, when there is one, filed a non-nil effective report —
/// checked across the truthful profile and every single-buyer deviation.
PropertyReport check_feasibility(const AllocationPolicy& policy, const Instance& instance,
                                 const CheckConfig& config);

/// Revenue of one outcome is nonnegative.
PropertyReport check_budget_balance(const MechanismOutcome& outcome);

/// Critical bids weakly grow with the diffusion set (infinity on top),
/// over all nested subset pairs of every buyer's neighbor set.
PropertyReport check_critical_bid_monotonic(const AllocationPolicy& policy,
                                            const Instance& instance, const CheckConfig& config);

/// Revenue of payment_a is at least that of payment_b on the truthful
/// profile of every instance.
PropertyReport check_revenue_dominance(const AllocationPolicy& policy,
                                       const PaymentRule& payment_a,
                                       const PaymentRule& payment_b,
                                       std::span<const Instance> instances);

struct CertifyOptions {
  int workers = 0;        // 0 = hardware concurrency; DAK_THREADS caps
  bool early_exit = true; // stop launching instances once refuted
};

/// One verdict over an instance set: Feasibility, P1, AllocMonotonic,
/// P2-P5, IC and IR must hold everywhere for `certified`; BudgetBalance
/// is reported alongside but does not gate (efficient mechanisms
/// legitimately run deficits). Instances are distributed across workers;
/// reports merge in instance order, so the canonical witness is the
/// first in enumeration order no matter the scheduling.
struct CertificationReport {
  std::string policy;
  std::string payment;
  std::size_t instances_evaluated = 0;
  bool certified = false;
  std::vector<PropertyReport> properties;

  const PropertyReport& property(Property p) const;
};

CertificationReport certify_mechanism(const AllocationPolicy& policy, const PaymentRule& payment,
                                      std::span<const Instance> instances,
                                      const CheckConfig& config, const CertifyOptions& options = {});

/// Re-executes a witness against the instance it was found on and checks
/// that it still exhibits the claimed violation, value for value. False
/// means the witness does not reproduce (which would be a verifier bug).
bool replay_witness(const AllocationPolicy& policy, const PaymentRule& payment,
                    const Instance& instance, const Witness& witness);

/// Stable-schema JSON ({"property":..,"holds":..,"checked":..,"witness":..}).
std::string property_json(const PropertyReport& report);
std::string report_json(const CertificationReport& report);

}  // namespace dak::verifier
