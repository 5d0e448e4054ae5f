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

#include "dak/verifier.hpp"

#include <algorithm>

#include <json.hpp>

#include "dak/parallel.hpp"

namespace dak::verifier {

namespace {

using nlohmann::ordered_json;

constexpr std::string_view kWinLeg = "win_payment";
constexpr std::string_view kLoseLeg = "lose_payment";

bool wins(const AllocationPolicy& policy, const SocialGraph& graph, const ReportProfile& profile,
          BuyerId i) {
  const auto w = policy.winner(graph, effective_profile(graph, profile));
  return w.has_value() && *w == i;
}

DecoupledPayment pay_at(const AllocationPolicy& policy, const PaymentRule& payment,
                        const SocialGraph& graph, const ReportProfile& truth, BuyerId i,
                        const Money& bid, const IdSet& diffusion) {
  return payment.decoupled(policy, graph, truth.with(graph, i, Report(bid, diffusion)), i);
}

}  // namespace

std::string_view to_string(Property p) {
  switch (p) {
    case Property::P1: return "P1";
    case Property::P2: return "P2";
    case Property::P3: return "P3";
    case Property::P4: return "P4";
    case Property::P5: return "P5";
    case Property::IC: return "IC";
    case Property::IR: return "IR";
    case Property::BudgetBalance: return "BudgetBalance";
    case Property::AllocMonotonic: return "AllocMonotonic";
    case Property::RevenueDominance: return "RevenueDominance";
    case Property::Feasibility: return "Feasibility";
    case Property::CriticalBidMonotonic: return "CriticalBidMonotonic";
  }
  return "?";
}

void CheckConfig::validate() const {
  if (bid_grid.empty()) throw Error("check config: empty bid grid");
  for (std::size_t k = 0; k < bid_grid.size(); ++k) {
    if (bid_grid[k].is_negative()) throw Error("check config: negative grid bid");
    if (k > 0 && !(bid_grid[k - 1] < bid_grid[k])) {
      throw Error("check config: bid grid must be sorted and distinct");
    }
  }
}

std::vector<Money> CheckConfig::probe_bids() const {
  validate();
  std::vector<Money> probes = bid_grid;
  if (probes.front() != Money(0)) probes.insert(probes.begin(), Money(0));
  if (include_midpoints) {
    std::vector<Money> out;
    out.reserve(probes.size() * 2);
    for (std::size_t k = 0; k < probes.size(); ++k) {
      out.push_back(probes[k]);
      if (k + 1 < probes.size()) out.push_back((probes[k] + probes[k + 1]) / Money(2));
    }
    out.push_back(probes.back() + Money(1));
    return out;
  }
  return probes;
}

PropertyReport check_value_monotonic(const AllocationPolicy& policy, const Instance& instance,
                                     const CheckConfig& config) {
  PropertyReport report{.property = Property::P1};
  const std::vector<Money> probes = config.probe_bids();
  const ReportProfile truth = truthful_profile(instance);
  const SocialGraph& graph = instance.graph;

  for (BuyerId i = 0; i < graph.buyer_count(); ++i) {
    for (const IdSet& subset : all_subsets(graph.neighbors_of(i), config.neighbor_subset_cap)) {
      std::optional<Money> first_win;
      for (const Money& bid : probes) {
        const bool won = wins(policy, graph, truth.with(graph, i, Report(bid, subset)), i);
        ++report.checked;
        if (won && !first_win) first_win = bid;
        if (!won && first_win) {
          report.holds = false;
          report.witness = Witness{Property::P1,   std::nullopt,
                                   i,              Report(*first_win, subset),
                                   Report(bid, subset), Money(0),
                                   Money(0),       "wins at the lower bid but loses at the higher"};
          return report;
        }
      }
    }
  }
  return report;
}

PropertyReport check_alloc_monotonic(const AllocationPolicy& policy, const Instance& instance,
                                     const CheckConfig& config) {
  PropertyReport report{.property = Property::AllocMonotonic};
  const std::vector<Money> probes = config.probe_bids();
  const ReportProfile truth = truthful_profile(instance);
  const SocialGraph& graph = instance.graph;

  for (BuyerId i = 0; i < graph.buyer_count(); ++i) {
    const std::vector<IdSet> subsets =
        all_subsets(graph.neighbors_of(i), config.neighbor_subset_cap);
    // Win table over (subset, bid); the pair scan below is lookups only.
    std::vector<std::vector<bool>> won(subsets.size());
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      won[s].reserve(probes.size());
      for (const Money& bid : probes) {
        won[s].push_back(wins(policy, graph, truth.with(graph, i, Report(bid, subsets[s])), i));
      }
    }
    for (std::size_t s1 = 0; s1 < subsets.size(); ++s1) {
      for (std::size_t s2 = 0; s2 < subsets.size(); ++s2) {
        if (!subsets[s2].subset_of(subsets[s1])) continue;
        for (std::size_t b1 = 0; b1 < probes.size(); ++b1) {
          if (!won[s1][b1]) continue;
          for (std::size_t b2 = b1; b2 < probes.size(); ++b2) {
            ++report.checked;
            if (!won[s2][b2]) {
              report.holds = false;
              report.witness =
                  Witness{Property::AllocMonotonic,
                          std::nullopt,
                          i,
                          Report(probes[b1], subsets[s1]),
                          Report(probes[b2], subsets[s2]),
                          Money(0),
                          Money(0),
                          "wins with the weaker report but loses with the stronger one"};
              return report;
            }
          }
        }
      }
    }
  }
  return report;
}

PropertyReport check_ic(const AllocationPolicy& policy, const PaymentRule& payment,
                        const Instance& instance, const CheckConfig& config) {
  PropertyReport report{.property = Property::IC};
  const std::vector<Money> probes = config.probe_bids();
  for (const Money& v : instance.valuations) {
    if (!std::binary_search(config.bid_grid.begin(), config.bid_grid.end(), v)) {
      throw Error("check config: bid grid must contain every true valuation (missing " + v.str() +
                  ")");
    }
  }

  const SocialGraph& graph = instance.graph;
  const ReportProfile truth = truthful_profile(instance);

  for (BuyerId i = 0; i < graph.buyer_count(); ++i) {
    const Money& valuation = instance.valuations[static_cast<std::size_t>(i)];
    const Money truthful_utility = utility_of(policy, payment, graph, truth, i, valuation);
    for (const Report& deviation : deviations(graph, i, probes, config.neighbor_subset_cap)) {
      const Money deviated =
          utility_of(policy, payment, graph, truth.with(graph, i, deviation), i, valuation);
      ++report.checked;
      if (deviated > truthful_utility) {
        report.holds = false;
        report.witness = Witness{Property::IC, std::nullopt,      i,       truth[i],
                                 deviation,    truthful_utility, deviated,
                                 "deviation strictly beats truthful full diffusion"};
        return report;
      }
    }
  }
  return report;
}

PropertyReport check_ir(const AllocationPolicy& policy, const PaymentRule& payment,
                        const Instance& instance, const CheckConfig& config) {
  PropertyReport report{.property = Property::IR};
  const SocialGraph& graph = instance.graph;
  const ReportProfile truth = truthful_profile(instance);

  for (BuyerId i = 0; i < graph.buyer_count(); ++i) {
    const Money& valuation = instance.valuations[static_cast<std::size_t>(i)];
    for (const IdSet& subset : all_subsets(graph.neighbors_of(i), config.neighbor_subset_cap)) {
      const Report report_i(valuation, subset);
      const Money u =
          utility_of(policy, payment, graph, truth.with(graph, i, report_i), i, valuation);
      ++report.checked;
      if (u < Money(0)) {
        report.holds = false;
        report.witness = Witness{Property::IR, std::nullopt, i,       truth[i],
                                 report_i,     Money(0),     u,
                                 "negative utility at the true valuation"};
        return report;
      }
    }
  }
  return report;
}

std::vector<PropertyReport> check_decoupled_properties(const AllocationPolicy& policy,
                                                       const PaymentRule& payment,
                                                       const Instance& instance,
                                                       const CheckConfig& config) {
  PropertyReport p2{.property = Property::P2};
  PropertyReport p3{.property = Property::P3};
  PropertyReport p4{.property = Property::P4};
  PropertyReport p5{.property = Property::P5};
  const std::vector<Money> probes = config.probe_bids();
  const SocialGraph& graph = instance.graph;
  const ReportProfile truth = truthful_profile(instance);

  for (BuyerId i = 0; i < graph.buyer_count(); ++i) {
    const Money& valuation = instance.valuations[static_cast<std::size_t>(i)];
    const std::vector<IdSet> subsets =
        all_subsets(graph.neighbors_of(i), config.neighbor_subset_cap);

    // P2: both decoupled payments constant over the probe bids.
    if (p2.holds) {
      for (const IdSet& subset : subsets) {
        const DecoupledPayment base = pay_at(policy, payment, graph, truth, i, probes[0], subset);
        for (std::size_t k = 1; k < probes.size() && p2.holds; ++k) {
          const DecoupledPayment cur = pay_at(policy, payment, graph, truth, i, probes[k], subset);
          ++p2.checked;
          if (cur != base) {
            const bool win_leg = cur.win_payment != base.win_payment;
            p2.holds = false;
            p2.witness = Witness{Property::P2,
                                 std::nullopt,
                                 i,
                                 Report(probes[0], subset),
                                 Report(probes[k], subset),
                                 win_leg ? base.win_payment : base.lose_payment,
                                 win_leg ? cur.win_payment : cur.lose_payment,
                                 std::string(win_leg ? kWinLeg : kLoseLeg) +
                                     " changes with the buyer's own bid"};
          }
        }
        if (!p2.holds) break;
      }
    }

    // Decoupled pair per subset at the true valuation, for P3-P5.
    std::vector<DecoupledPayment> pay;
    pay.reserve(subsets.size());
    for (const IdSet& subset : subsets) {
      pay.push_back(pay_at(policy, payment, graph, truth, i, valuation, subset));
    }

    // P3: win minus lose equals the critical bid wherever it is finite.
    if (p3.holds) {
      for (std::size_t s = 0; s < subsets.size(); ++s) {
        const ExtendedBid critical = critical_bid(policy, graph, truth, i, subsets[s]);
        if (critical.is_infinite()) continue;
        ++p3.checked;
        const Money difference = pay[s].win_payment - pay[s].lose_payment;
        if (difference != critical.value()) {
          p3.holds = false;
          p3.witness = Witness{Property::P3,
                               std::nullopt,
                               i,
                               Report(valuation, subsets[s]),
                               Report(valuation, subsets[s]),
                               difference,
                               critical.value(),
                               "win minus lose payment differs from the critical bid"};
          break;
        }
      }
    }

    // P4: growing the diffusion set never raises either payment.
    if (p4.holds) {
      for (std::size_t s1 = 0; s1 < subsets.size() && p4.holds; ++s1) {
        for (std::size_t s2 = 0; s2 < subsets.size(); ++s2) {
          if (!subsets[s2].subset_of(subsets[s1])) continue;
          ++p4.checked;
          const bool win_bad = pay[s2].win_payment < pay[s1].win_payment;
          const bool lose_bad = pay[s2].lose_payment < pay[s1].lose_payment;
          if (win_bad || lose_bad) {
            p4.holds = false;
            p4.witness = Witness{Property::P4,
                                 std::nullopt,
                                 i,
                                 Report(valuation, subsets[s2]),
                                 Report(valuation, subsets[s1]),
                                 win_bad ? pay[s2].win_payment : pay[s2].lose_payment,
                                 win_bad ? pay[s1].win_payment : pay[s1].lose_payment,
                                 std::string(win_bad ? kWinLeg : kLoseLeg) +
                                     " is larger under the larger diffusion set"};
            break;
          }
        }
      }
    }

    // P5: the empty-diffusion lose payment never charges the buyer.
    if (p5.holds) {
      ++p5.checked;
      if (pay[0].lose_payment > Money(0)) {  // subsets[0] is the empty set
        p5.holds = false;
        p5.witness = Witness{Property::P5,
                             std::nullopt,
                             i,
                             Report(valuation, IdSet()),
                             Report(valuation, IdSet()),
                             pay[0].lose_payment,
                             Money(0),
                             "positive lose payment under empty diffusion"};
      }
    }
  }
  return {p2, p3, p4, p5};
}

PropertyReport check_feasibility(const AllocationPolicy& policy, const Instance& instance,
                                 const CheckConfig& config) {
  PropertyReport report{.property = Property::Feasibility};
  const std::vector<Money> probes = config.probe_bids();
  const SocialGraph& graph = instance.graph;
  const ReportProfile truth = truthful_profile(instance);

  auto inspect = [&](const ReportProfile& profile, BuyerId deviator, const Report& deviation) {
    const ReportProfile effective = effective_profile(graph, profile);
    const auto w = policy.winner(graph, effective);
    ++report.checked;
    if (w && (*w < 0 || *w >= effective.size() || effective[*w].is_nil())) {
      report.holds = false;
      report.witness = Witness{Property::Feasibility,
                               std::nullopt,
                               deviator,
                               deviator >= 0 ? truth[deviator] : Report::nil(),
                               deviation,
                               Money(0),
                               Money(0),
                               "winner " + std::to_string(*w) + " has a nil effective report"};
      return false;
    }
    return true;
  };

  if (!inspect(truth, -1, Report::nil())) return report;
  for (BuyerId i = 0; i < graph.buyer_count(); ++i) {
    for (const Report& deviation : deviations(graph, i, probes, config.neighbor_subset_cap)) {
      if (!inspect(truth.with(graph, i, deviation), i, deviation)) return report;
    }
  }
  return report;
}

PropertyReport check_budget_balance(const MechanismOutcome& outcome) {
  PropertyReport report{.property = Property::BudgetBalance};
  report.checked = 1;
  if (outcome.revenue < Money(0)) {
    report.holds = false;
    report.witness = Witness{Property::BudgetBalance, std::nullopt, -1,       Report::nil(),
                             Report::nil(),           outcome.revenue, Money(0),
                             "negative revenue"};
  }
  return report;
}

PropertyReport check_critical_bid_monotonic(const AllocationPolicy& policy,
                                            const Instance& instance, const CheckConfig& config) {
  PropertyReport report{.property = Property::CriticalBidMonotonic};
  const SocialGraph& graph = instance.graph;
  const ReportProfile truth = truthful_profile(instance);

  for (BuyerId i = 0; i < graph.buyer_count(); ++i) {
    const std::vector<IdSet> subsets =
        all_subsets(graph.neighbors_of(i), config.neighbor_subset_cap);
    std::vector<ExtendedBid> critical;
    critical.reserve(subsets.size());
    for (const IdSet& subset : subsets) {
      critical.push_back(critical_bid(policy, graph, truth, i, subset));
    }
    for (std::size_t s1 = 0; s1 < subsets.size(); ++s1) {
      for (std::size_t s2 = 0; s2 < subsets.size(); ++s2) {
        if (!subsets[s2].subset_of(subsets[s1])) continue;
        ++report.checked;
        if (!ExtendedBid::numeric_less_equal(critical[s2], critical[s1])) {
          report.holds = false;
          report.witness =
              Witness{Property::CriticalBidMonotonic,
                      std::nullopt,
                      i,
                      Report(Money(0), subsets[s2]),
                      Report(Money(0), subsets[s1]),
                      critical[s2].is_finite() ? critical[s2].value() : Money(0),
                      critical[s1].is_finite() ? critical[s1].value() : Money(0),
                      "critical bid " + critical[s2].str() + " under the smaller set exceeds " +
                          critical[s1].str() + " under the larger"};
          return report;
        }
      }
    }
  }
  return report;
}

PropertyReport check_revenue_dominance(const AllocationPolicy& policy,
                                       const PaymentRule& payment_a,
                                       const PaymentRule& payment_b,
                                       std::span<const Instance> instances) {
  PropertyReport report{.property = Property::RevenueDominance};
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const Instance& instance = instances[idx];
    const ReportProfile truth = truthful_profile(instance);
    const Money rev_a = run_mechanism(policy, payment_a, instance.graph, truth).revenue;
    const Money rev_b = run_mechanism(policy, payment_b, instance.graph, truth).revenue;
    ++report.checked;
    if (rev_a < rev_b) {
      report.holds = false;
      report.witness = Witness{Property::RevenueDominance,
                               idx,
                               -1,
                               Report::nil(),
                               Report::nil(),
                               rev_a,
                               rev_b,
                               "first payment rule earns less on this instance"};
      return report;
    }
  }
  return report;
}

const PropertyReport& CertificationReport::property(Property p) const {
  for (const PropertyReport& r : properties) {
    if (r.property == p) return r;
  }
  throw Error("certification report has no entry for property " + std::string(to_string(p)));
}

CertificationReport certify_mechanism(const AllocationPolicy& policy, const PaymentRule& payment,
                                      std::span<const Instance> instances,
                                      const CheckConfig& config,
                                      const CertifyOptions& options) {
  constexpr Property kOrder[] = {Property::Feasibility, Property::P1, Property::AllocMonotonic,
                                 Property::P2,          Property::P3, Property::P4,
                                 Property::P5,          Property::IC, Property::IR,
                                 Property::BudgetBalance};
  auto gating = [](Property p) { return p != Property::BudgetBalance; };

  CertificationReport out;
  out.policy = policy.name();
  out.payment = payment.name();
  for (Property p : kOrder) out.properties.push_back(PropertyReport{.property = p});

  auto run_instance = [&](const Instance& instance) {
    std::vector<PropertyReport> reports;
    reports.push_back(check_feasibility(policy, instance, config));
    reports.push_back(check_value_monotonic(policy, instance, config));
    reports.push_back(check_alloc_monotonic(policy, instance, config));
    for (PropertyReport& r : check_decoupled_properties(policy, payment, instance, config)) {
      reports.push_back(std::move(r));
    }
    reports.push_back(check_ic(policy, payment, instance, config));
    reports.push_back(check_ir(policy, payment, instance, config));
    reports.push_back(
        check_budget_balance(run_mechanism(policy, payment, instance.graph,
                                           truthful_profile(instance))));
    // Reorder into kOrder (feasibility, P1, AllocMonotonic came first).
    std::vector<PropertyReport> ordered;
    for (Property p : kOrder) {
      for (PropertyReport& r : reports) {
        if (r.property == p) ordered.push_back(std::move(r));
      }
    }
    return ordered;
  };

  const int workers = resolve_worker_count(options.workers);
  const std::size_t chunk = static_cast<std::size_t>(workers) * 8;
  std::size_t begin = 0;
  bool refuted = false;
  while (begin < instances.size() && !(refuted && options.early_exit)) {
    const std::size_t end = std::min(begin + chunk, instances.size());
    std::vector<std::vector<PropertyReport>> block(end - begin);
    parallel_for(end - begin, workers,
                 [&](std::size_t k) { block[k] = run_instance(instances[begin + k]); });
    for (std::size_t k = 0; k < block.size(); ++k) {
      out.instances_evaluated += 1;
      for (std::size_t slot = 0; slot < out.properties.size(); ++slot) {
        PropertyReport& merged = out.properties[slot];
        PropertyReport& piece = block[k][slot];
        merged.checked += piece.checked;
        if (!piece.holds && merged.holds) {
          merged.holds = false;
          merged.witness = std::move(piece.witness);
          if (merged.witness) merged.witness->instance_index = begin + k;
          if (gating(merged.property)) refuted = true;
        }
      }
    }
    begin = end;
  }

  out.certified = true;
  for (const PropertyReport& r : out.properties) {
    if (gating(r.property) && !r.holds) out.certified = false;
  }
  return out;
}

bool replay_witness(const AllocationPolicy& policy, const PaymentRule& payment,
                    const Instance& instance, const Witness& witness) {
  const SocialGraph& graph = instance.graph;
  const ReportProfile truth = truthful_profile(instance);
  const BuyerId i = witness.buyer;
  const auto valuation = [&] { return instance.valuations.at(static_cast<std::size_t>(i)); };
  const auto leg = [&](const DecoupledPayment& p) {
    return witness.detail.rfind(kWinLeg, 0) == 0 ? p.win_payment : p.lose_payment;
  };

  switch (witness.property) {
    case Property::IC: {
      const Money u_truth =
          utility(valuation(), run_mechanism(policy, payment, graph, truth), i);
      const Money u_dev = utility(
          valuation(),
          run_mechanism(policy, payment, graph, truth.with(graph, i, witness.deviation)), i);
      return u_truth == witness.baseline_value && u_dev == witness.deviation_value &&
             u_dev > u_truth;
    }
    case Property::IR: {
      const Money u = utility(
          valuation(),
          run_mechanism(policy, payment, graph, truth.with(graph, i, witness.deviation)), i);
      return u == witness.deviation_value && u < Money(0);
    }
    case Property::P1:
    case Property::AllocMonotonic:
      return wins(policy, graph, truth.with(graph, i, witness.baseline), i) &&
             !wins(policy, graph, truth.with(graph, i, witness.deviation), i);
    case Property::P2: {
      const DecoupledPayment a = payment.decoupled(
          policy, graph, truth.with(graph, i, witness.baseline), i);
      const DecoupledPayment b = payment.decoupled(
          policy, graph, truth.with(graph, i, witness.deviation), i);
      return leg(a) == witness.baseline_value && leg(b) == witness.deviation_value &&
             leg(a) != leg(b);
    }
    case Property::P3: {
      const DecoupledPayment p = payment.decoupled(
          policy, graph, truth.with(graph, i, witness.baseline), i);
      const ExtendedBid critical =
          critical_bid(policy, graph, truth, i, witness.baseline.diffusion());
      if (critical.is_infinite()) return false;
      const Money difference = p.win_payment - p.lose_payment;
      return difference == witness.baseline_value && critical.value() == witness.deviation_value &&
             difference != critical.value();
    }
    case Property::P4: {
      const DecoupledPayment small = payment.decoupled(
          policy, graph, truth.with(graph, i, witness.baseline), i);
      const DecoupledPayment large = payment.decoupled(
          policy, graph, truth.with(graph, i, witness.deviation), i);
      return leg(small) == witness.baseline_value && leg(large) == witness.deviation_value &&
             leg(small) < leg(large);
    }
    case Property::P5: {
      const DecoupledPayment p = payment.decoupled(
          policy, graph, truth.with(graph, i, witness.baseline), i);
      return p.lose_payment == witness.baseline_value && p.lose_payment > Money(0);
    }
    case Property::BudgetBalance: {
      const Money revenue = run_mechanism(policy, payment, graph, truth).revenue;
      return revenue == witness.baseline_value && revenue < Money(0);
    }
    case Property::Feasibility: {
      const ReportProfile profile =
          i >= 0 ? truth.with(graph, i, witness.deviation) : truth;
      const ReportProfile effective = effective_profile(graph, profile);
      const auto w = policy.winner(graph, effective);
      return w.has_value() && effective[*w].is_nil();
    }
    case Property::CriticalBidMonotonic: {
      const ExtendedBid small =
          critical_bid(policy, graph, truth, i, witness.baseline.diffusion());
      const ExtendedBid large =
          critical_bid(policy, graph, truth, i, witness.deviation.diffusion());
      return !ExtendedBid::numeric_less_equal(small, large);
    }
    case Property::RevenueDominance:
      throw Error("dominance witnesses replay through check_revenue_dominance");
  }
  return false;
}

namespace {

ordered_json report_to_json_value(const Report& r) {
  if (r.is_nil()) return nullptr;
  ordered_json j;
  j["bid"] = r.bid().str();
  j["diffusion"] = r.diffusion().to_vector();
  return j;
}

ordered_json witness_to_json_value(const Witness& w) {
  ordered_json j;
  j["property"] = std::string(to_string(w.property));
  if (w.instance_index) j["instance"] = *w.instance_index;
  if (w.buyer >= 0) j["buyer"] = w.buyer;
  j["baseline"] = report_to_json_value(w.baseline);
  j["deviation"] = report_to_json_value(w.deviation);
  j["baseline_value"] = w.baseline_value.str();
  j["deviation_value"] = w.deviation_value.str();
  j["detail"] = w.detail;
  return j;
}

ordered_json property_to_json_value(const PropertyReport& r) {
  ordered_json j;
  j["property"] = std::string(to_string(r.property));
  j["holds"] = r.holds;
  j["checked"] = r.checked;
  j["witness"] = r.witness ? witness_to_json_value(*r.witness) : ordered_json(nullptr);
  return j;
}

}  // namespace

std::string property_json(const PropertyReport& report) {
  return property_to_json_value(report).dump();
}

std::string report_json(const CertificationReport& report) {
  ordered_json j;
  j["policy"] = report.policy;
  j["payment"] = report.payment;
  j["instances"] = report.instances_evaluated;
  j["certified"] = report.certified;
  j["properties"] = ordered_json::array();
  for (const PropertyReport& r : report.properties) {
    j["properties"].push_back(property_to_json_value(r));
  }
  return j.dump(2);
}

}  // namespace dak::verifier
