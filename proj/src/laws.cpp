#include "seqtop/laws.hpp"

#include <functional>

namespace seqtop {

namespace {

std::string profile_point(const GroundSet& g, Mask a, int p) {
  return "profile " + g.format(a) + ", point " + g.label(p);
}

// All antitone coherent operators pointwise below `op` that keep only domain
// limits whenever they have any (domain-capture), and whose restriction to the
// domain matches op's.  Calls sink(table); used by the maximality law.
void enumerate_conforming(const TailLimitOperator& op, Mask d,
                          const std::function<void(const std::vector<Mask>&)>& sink) {
  const int n = op.ground.size();
  const Mask full = op.ground.full();
  std::vector<Mask> profiles;
  for (Mask a = 1; a <= full; ++a) profiles.push_back(a);
  std::sort(profiles.begin(), profiles.end(),
            [](Mask a, Mask b) { return card(a) != card(b) ? card(a) < card(b) : a < b; });
  std::vector<Mask> table(size_t{1} << n, 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == profiles.size()) {
      sink(table);
      return;
    }
    Mask a = profiles[i];
    Mask cap = op.table[a];
    for (int j : indices_of(a)) {
      Mask b = a & ~bit(j);
      if (b) cap &= table[b];
    }
    Mask forced = (card(a) == 1) ? (a & cap) : 0;  // coherence on singletons
    if (card(a) == 1 && forced == 0) return;       // cannot be coherent below op
    for_each_submask(cap & ~forced, [&](Mask extra) {
      Mask v = forced | extra;
      if ((v & d) && (v & ~d)) return;                             // domain capture broken
      if (subset_of(a, d) && (v & d) != (op.table[a] & d)) return; // domain restriction changed
      table[a] = v;
      rec(i + 1);
    });
    table[a] = 0;
  };
  rec(0);
}

}  // namespace

LawReport check_operator_laws(const TailLimitOperator& op, Mask d, int maximality_enum_cap) {
  LawReport rep;
  const int n = op.ground.size();
  const Mask full = op.ground.full();

  FinTopology tau = derived_topology(op);
  require_designation(tau, d);
  TailLimitOperator assoc = associated_operator(tau);
  TailLimitOperator star = star_operator(op, d);
  FinTopology tau_star_refined = separating_refinement(tau, d);
  FinTopology tau_of_star = derived_topology(star);
  TailLimitOperator assoc_star = star_operator(assoc, d);
  IterationResult iter = iterate_operator(op, n + 2);
  IterationResult iter_star = iterate_operator(star, n + 2);
  bool fo_domain = first_order_on(op, d);
  bool fo_full = op.table == assoc.table;

  auto add = [&](LawCheck c) { rep.checks.push_back(std::move(c)); };

  {
    LawCheck c{"limit-implies-convergence", true, true, ""};
    for (Mask a = 1; a <= full && c.pass; ++a)
      for (int p : indices_of(op.table[a]))
        if (!subset_of(a, tau.min_nbhd[p])) {
          c.pass = false;
          c.details = profile_point(op.ground, a, p) + " does not converge";
          break;
        }
    add(std::move(c));
  }
  {
    LawCheck c{"derived-associated-roundtrip", true, true, ""};
    FinTopology back = derived_topology(assoc);
    if (!(back == tau)) {
      c.pass = false;
      c.details = "derived topology of the associated operator differs";
    } else if (order_of(assoc).kind != OperatorOrder::Kind::FirstOrder) {
      c.pass = false;
      c.details = "associated operator is not first order";
    }
    add(std::move(c));
  }
  {
    LawCheck c{"pointwise-smaller-gives-finer", true, true, ""};
    if (!pointwise_leq(star, op)) {
      c.pass = false;
      c.details = "separating modification exceeds the operator somewhere";
    } else if (!finer_or_equal(tau, tau_of_star)) {
      c.pass = false;
      c.details = "smaller operator did not yield a finer derived topology";
    }
    add(std::move(c));
  }
  {
    LawCheck c{"finer-topology-shrinks-first-order", fo_full, true, ""};
    if (fo_full) {
      // The derived topology of any pointwise-smaller operator contains tau;
      // for a first-order base that containment forces the pointwise bound.
      if (finer_or_equal(tau, tau_of_star) && !pointwise_leq(star, op)) {
        c.pass = false;
        c.details = "containment of topologies without pointwise bound (modified operator)";
      }
      if (!pointwise_leq(assoc, op)) {
        c.pass = false;
        c.details = "first-order operator disagrees with its topology's operator";
      }
    }
    add(std::move(c));
  }
  {
    LawCheck c{"restriction-matches-subspace", true, true, ""};
    TailLimitOperator restricted = restrict_operator(op, d);
    FinTopology sub = subspace(tau, d);
    if (!(derived_topology(restricted) == sub)) {
      c.pass = false;
      c.details = "derived topology of the restricted operator differs from the subspace";
    }
    add(std::move(c));
  }
  {
    LawCheck c{"iterates-grow-below-target", true, true, ""};
    for (size_t i = 0; i + 1 < iter.tables.size() && c.pass; ++i)
      for (Mask a = 1; a <= full; ++a)
        if (!subset_of(iter.tables[i][a], iter.tables[i + 1][a])) {
          c.pass = false;
          c.details = "iterate chain not increasing at " + op.ground.format(a);
          break;
        }
    for (const auto& t : iter.tables)
      for (Mask a = 1; a <= full && c.pass; ++a)
        if (!subset_of(t[a], assoc.table[a])) {
          c.pass = false;
          c.details = "iterate exceeds the topology's operator at " + op.ground.format(a);
        }
    add(std::move(c));
  }
  {
    LawCheck c{"stabilized-chain-stays", iter.stable_at > 0, true, ""};
    if (c.hypothesis_met)
      for (size_t i = iter.stable_at - 1; i + 1 < iter.tables.size(); ++i)
        if (iter.tables[i] != iter.tables[i + 1]) {
          c.pass = false;
          c.details = "chain moved after reported stabilization";
          break;
        }
    add(std::move(c));
  }

  bool star_a_sep = cross_separated(tau, tau_of_star, d);
  bool star_capture = true;
  for (Mask a = 1; a <= full; ++a)
    if ((star.table[a] & d) && (star.table[a] & ~d)) star_capture = false;
  bool star_domain_match = true;
  for_each_submask(d, [&](Mask a) {
    if (a && (star.table[a] & d) != (op.table[a] & d)) star_domain_match = false;
  });

  {
    LawCheck c{"separation-forces-domain-capture", star_a_sep && finer_or_equal(tau, tau_of_star),
               true, ""};
    if (c.hypothesis_met && !star_capture) {
      c.pass = false;
      c.details = "modified operator mixes domain and outside limits despite separation";
    }
    add(std::move(c));
  }
  {
    LawCheck c{"domain-capture-forces-separation", fo_domain && star_capture && star_domain_match,
               true, ""};
    if (c.hypothesis_met && !star_a_sep) {
      c.pass = false;
      c.details = "derived topology of the modified operator fails cross separation";
    }
    add(std::move(c));
  }
  {
    LawCheck c{"star-is-largest-conforming", n <= maximality_enum_cap, true, ""};
    if (!star_capture || !star_domain_match || !pointwise_leq(star, op)) {
      c.hypothesis_met = true;
      c.pass = false;
      c.details = "modified operator itself does not conform";
    } else if (c.hypothesis_met) {
      enumerate_conforming(op, d, [&](const std::vector<Mask>& table) {
        for (Mask a = 1; a <= full; ++a)
          if (!subset_of(table[a], star.table[a])) {
            c.pass = false;
            c.details = "a conforming operator exceeds the modification at " + op.ground.format(a);
          }
      });
    } else {
      c.details = "ground too large for exhaustive enumeration";
    }
    add(std::move(c));
  }
  {
    LawCheck c{"separated-limits-upgrade", true, true, ""};
    if (!star_a_sep) {
      c.pass = false;
      c.details = "modified operator's topology fails cross separation";
    }
    for (Mask a = 1; a <= full && c.pass; ++a)
      for (int q = 0; q < n && c.pass; ++q)
        if (subset_of(a, tau_of_star.min_nbhd[q]) && has(op.table[a], q) &&
            !has(star.table[a], q)) {
          c.pass = false;
          c.details = "limit surviving in the finer topology was dropped: " +
                      profile_point(op.ground, a, q);
        }
    add(std::move(c));
  }
  {
    LawCheck c{"outside-limit-iteration-match", false, true, ""};
    for (Mask a = 1; a <= full; ++a) {
      if ((assoc_star.table[a] & ~d) == 0) continue;
      c.hypothesis_met = true;
      size_t steps = std::min(iter.tables.size(), iter_star.tables.size());
      for (size_t i = 0; i < steps; ++i)
        if (iter.tables[i][a] != iter_star.tables[i][a]) {
          c.pass = false;
          c.details = "iterates diverge at " + op.ground.format(a) + " step " +
                      std::to_string(i + 1);
        }
    }
    add(std::move(c));
  }
  {
    LawCheck c{"first-order-domain-chain", fo_domain, true, ""};
    if (c.hypothesis_met) {
      if (!finer_or_equal(tau, tau_star_refined)) {
        c.pass = false;
        c.details = "refinement lost base opens";
      } else if (!finer_or_equal(tau_star_refined, tau_of_star)) {
        c.pass = false;
        c.details = "modified operator's topology does not refine the separating refinement";
      } else if (!(derived_topology(associated_operator(tau_star_refined)) == tau_star_refined)) {
        c.pass = false;
        c.details = "separating refinement is not sequentially stable";
      }
      if (c.pass && fo_full) {
        if (order_of(star).kind != OperatorOrder::Kind::FirstOrder) {
          c.pass = false;
          c.details = "modification of a first-order operator is not first order";
        } else if (!(tau_star_refined == tau_of_star)) {
          c.pass = false;
          c.details = "first-order chain does not collapse to equality";
        }
      }
    }
    add(std::move(c));
  }
  {
    OperatorOrder ord = order_of(op);
    bool star_fo = order_of(star).kind == OperatorOrder::Kind::FirstOrder;
    LawCheck c{"order-preserved-by-star",
               ord.kind != OperatorOrder::Kind::NotAnyOrder && fo_domain && star_fo, true, ""};
    if (c.hypothesis_met && !(star.table == assoc_star.table)) {
      c.pass = false;
      c.details = "modification differs from the topology operator's modification";
    }
    add(std::move(c));
  }
  return rep;
}

DensityCheck check_density_law(const FinTopology& t, Mask d) {
  DensityCheck out;
  require_designation(t, d);
  TailLimitOperator assoc = associated_operator(t);
  TailLimitOperator star = star_operator(assoc, d);
  const Mask outside = t.ground.full() & ~d;
  out.covered = true;
  out.covered_stably = true;
  for (int x : indices_of(outside)) {
    bool cov = false, stab = false;
    for_each_submask(d, [&](Mask a) {
      if (a == 0 || !has(assoc.table[a], x)) return;
      cov = true;
      if (assoc.table[a] == star.table[a]) stab = true;
    });
    out.covered &= cov;
    out.covered_stably &= stab;
  }
  if (outside == 0) out.covered = out.covered_stably = true;
  out.dense_base = is_dense(t, d);
  out.dense_refined = is_dense(separating_refinement(t, d), d);
  out.pass = (!out.covered || out.dense_base) && (!out.covered_stably || out.dense_refined);
  return out;
}

SweepStats sweep_separation(int n, int max_enum) {
  SweepStats st;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  GroundSet g(labels);
  auto topos = all_topologies(n, max_enum);
  st.topologies = topos.size();
  auto note = [&](const FinTopology& t, Mask d, const std::string& what) {
    ++st.counterexamples;
    if (st.failures.size() < 8)
      st.failures.push_back("n=" + std::to_string(n) + " D=" + t.ground.format(d) + " " + what);
  };
  for (const auto& opens : topos) {
    FinTopology t = make_topology(g, opens);
    for (Mask d = 0; d <= g.full(); ++d) {
      if (designation_problem(t, d).has_value()) continue;
      ++st.designations;
      FinTopology refined = separating_refinement(t, d);
      SeparationReport r = verify_minimality(t, refined, d, max_enum, &topos);
      if (!r.a_fin) note(t, d, "refinement not finer");
      if (!r.a_sep) note(t, d, "refinement not separating");
      if (!r.a_min) note(t, d, "refinement not minimal");
      if (!r.unique_minimum) note(t, d, "minimal refinement not unique");
      if (!(subspace(refined, d) == subspace(t, d))) note(t, d, "domain subspace changed");
      FinTopology via_star = derived_topology(star_operator(associated_operator(t), d));
      if (!(via_star == refined)) note(t, d, "starred-operator route disagrees");
      if (!finer_or_equal(t, refined)) note(t, d, "chain start broken");
      if (!finer_or_equal(refined, via_star)) note(t, d, "chain end broken");
    }
  }
  return st;
}

}  // namespace seqtop
