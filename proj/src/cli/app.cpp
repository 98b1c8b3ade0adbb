// Copyright 2026 The qent Authors
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


#include "qent/cli/app.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "qent/capacity.hpp"
#include "qent/cli/document.hpp"
#include "qent/cli/report.hpp"

namespace qent::cli {

namespace {

struct Options {
  bool json = false;
  bool bits = false;
  bool strict = false;
  bool additivity = false;
  bool with_cc = false;
  std::uint64_t seed = 1;
  int restarts = 16;
  int max_iters = 2000;
  double tol = 1e-7;
  std::vector<std::string> files;
};

Index max_dim_from_env() {
  const char* raw = std::getenv("QENT_MAX_DIM");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxDim;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0' || v < 1) {
    throw CLI::ValidationError("QENT_MAX_DIM", "must be a positive integer, got \"" +
                                                   std::string(raw) + "\"");
  }
  return static_cast<Index>(v);
}

void guard(Index needed, Index limit, const std::string& what) {
  if (needed > limit) {
    throw DimensionGuard(what + ": embedded dimension " + std::to_string(needed) +
                         " exceeds the limit " + std::to_string(limit) + " (QENT_MAX_DIM)");
  }
}

template <typename T>
T expect(Document doc, const std::string& path) {
  if (auto* v = std::get_if<T>(&doc)) return std::move(*v);
  throw InvalidInput(path + ": unexpected document kind \"" + kind_name(doc) + "\"");
}

OptimizerConfig config_of(const Options& o) {
  OptimizerConfig cfg;
  cfg.seed = o.seed;
  cfg.restarts = o.restarts;
  cfg.max_iters = o.max_iters;
  cfg.tol = o.tol;
  cfg.validate();
  return cfg;
}

void header(Report& r, const char* command, const Options& o) {
  r.text("command", command);
  r.text("units", o.bits ? "bits" : "nats");
}

void entropy_of_state(Report& r, const AlgebraState& s, Index limit) {
  guard(s.dim() * s.dim(), limit, "entropy");
  const double closed = q_entropy_closed(s);
  const double direct = q_entropy_direct(s);
  r.text("kind", "state");
  r.text("shape", s.shape().to_string());
  r.integer("algebra.rank", algebra_rank(s.shape()));
  r.integer("algebra.dim", algebra_dim(s.shape()));
  r.info("algebra.log_dim", std::log(static_cast<double>(algebra_dim(s.shape()))));
  r.info("S", vn_entropy(s));
  r.info("H.closed", closed);
  r.info("H.direct", direct);
  r.info("H.gap", std::abs(closed - direct));
}

void entropy_of_coupling(Report& r, const Coupling& c, Index limit) {
  guard(c.dim_a() * c.dim_b(), limit, "entropy");
  const AlgebraState sigma = c.state_b();
  const InfoReport e = entangled_information(c);
  const Classification k = classify(c);
  r.text("kind", "coupling");
  r.text("shape.a", c.shape_a().to_string());
  r.text("shape.b", c.shape_b().to_string());
  r.info("S.a", vn_entropy(c.rho()));
  r.info("S.b", vn_entropy(sigma));
  r.info("E", e.value);
  r.info("I", total_information(c).value);
  r.info("H.b", q_entropy_closed(sigma));
  r.info("H.conditional", q_conditional_entropy(sigma, c));
  r.flag("tcp", k.tcp);
  r.flag("cp", k.cp);
  r.flag("truly_quantum", k.truly_quantum);
}

void entropy_of_ensemble(Report& r, const Ensemble& e, Index limit) {
  const Index n = static_cast<Index>(e.states.size());
  guard(n * e.states.front().dim(), limit, "entropy");
  const Coupling c = diagonal_coupling(e);
  r.text("kind", "ensemble");
  r.text("shape", e.states.front().shape().to_string());
  r.integer("size", n);
  r.info("S.average", vn_entropy(c.sigma()));
  r.info("mean_conditional_entropy", mean_conditional_entropy(e));
  r.info("E", entangled_information(c).value);
  r.info("I", total_information(c).value);
}

int cmd_entropy(const Options& o, std::ostream& out) {
  const Index limit = max_dim_from_env();
  const std::string& path = o.files.at(0);
  Document doc = read_document(path);
  Report r;
  header(r, "entropy", o);
  if (const auto* s = std::get_if<AlgebraState>(&doc)) {
    entropy_of_state(r, *s, limit);
  } else if (const auto* c = std::get_if<Coupling>(&doc)) {
    entropy_of_coupling(r, *c, limit);
  } else if (const auto* e = std::get_if<Ensemble>(&doc)) {
    entropy_of_ensemble(r, *e, limit);
  } else {
    throw InvalidInput(path + ": entropy takes a state, coupling or ensemble document");
  }
  r.render(out, o.json, o.bits);
  return kOk;
}

int cmd_relent(const Options& o, std::ostream& out) {
  const Index limit = max_dim_from_env();
  const AlgebraState a = expect<AlgebraState>(read_document(o.files.at(0)), o.files.at(0));
  const AlgebraState b = expect<AlgebraState>(read_document(o.files.at(1)), o.files.at(1));
  if (a.dim() != b.dim()) {
    throw InvalidInput("relent: states act on spaces of dimension " + std::to_string(a.dim()) +
                       " and " + std::to_string(b.dim()));
  }
  guard(a.dim(), limit, "relent");
  const InfoReport bs = bs_relative_entropy(a.density(), b.density());
  const InfoReport um = umegaki_relative_entropy(a.density(), b.density());
  Report r;
  header(r, "relent", o);
  r.integer("dim", a.dim());
  r.info("R_BS", bs.value);
  r.info("R_Umegaki", um.value);
  if (bs.finite && um.finite) {
    r.info("difference", bs.value - um.value);
  } else {
    r.text("difference", "undefined");
  }
  r.flag("infinite", !bs.finite || !um.finite);
  r.render(out, o.json, o.bits);
  return kOk;
}

int cmd_channel_info(const Options& o, std::ostream& out, std::ostream& err) {
  const Index limit = max_dim_from_env();
  const Channel ch = expect<Channel>(read_document(o.files.at(0)), o.files.at(0));
  const AlgebraState s = expect<AlgebraState>(read_document(o.files.at(1)), o.files.at(1));
  guard(std::max(ch.dim_in() * ch.dim_out(), ch.dim_in() * ch.dim_in()), limit, "channel-info");
  const OptimizerConfig cfg = config_of(o);

  const AlgebraState output = apply_channel(ch, s);
  const double s_out = vn_entropy(output);
  const InfoReport e = entangled_information(push_coupling(standard_coupling(s), ch));
  const MinEntropyResult inner = min_output_mean_entropy(s, ch, cfg);

  Report r;
  header(r, "channel-info", o);
  r.text("shape_in", ch.shape_in().to_string());
  r.text("shape_out", ch.shape_out().to_string());
  r.info("S_in", vn_entropy(s));
  r.info("S_out", s_out);
  r.info("E", e.value);
  r.info("I_q", info_q(s, ch));
  r.info("I_c", s_out - inner.value);
  r.info("I_s", coherent_info(s, ch));
  r.info("I_c.min_mean_entropy", inner.value);
  r.integer("I_c.ensemble_size", static_cast<long long>(inner.decomposition.size()));
  r.integer("I_c.restarts", cfg.restarts);
  r.integer("I_c.iterations", inner.iterations_used);
  r.flag("I_c.converged", inner.converged);
  r.render(out, o.json, o.bits);
  if (o.strict && !inner.converged) {
    err << "qent: error: minimal mean entropy search did not converge\n";
    return kNotConverged;
  }
  return kOk;
}

int cmd_capacity(const Options& o, std::ostream& out, std::ostream& err) {
  const Index limit = max_dim_from_env();
  const Channel ch = expect<Channel>(read_document(o.files.at(0)), o.files.at(0));
  guard(std::max(ch.dim_in() * ch.dim_out(), ch.dim_in() * ch.dim_in()), limit, "capacity");
  const OptimizerConfig cfg = config_of(o);

  Report r;
  header(r, "capacity", o);
  r.text("shape_in", ch.shape_in().to_string());
  r.text("shape_out", ch.shape_out().to_string());
  r.integer("seed", static_cast<long long>(o.seed));
  r.integer("restarts", cfg.restarts);
  r.real("tol", cfg.tol);

  bool converged = true;
  const CapacityReport cq = capacity_q(ch, cfg);
  r.info("C_q", cq.value);
  r.matrix("C_q.argmax", cq.argmax_state.density());
  r.integer("C_q.iterations", cq.iterations_used);
  r.flag("C_q.converged", cq.converged);
  converged = converged && cq.converged;

  if (o.with_cc) {
    const CapacityReport cc = capacity_c(ch, cfg);
    r.info("C_c", cc.value);
    r.matrix("C_c.argmax", cc.argmax_state.density());
    r.integer("C_c.iterations", cc.iterations_used);
    r.flag("C_c.converged", cc.converged);
    converged = converged && cc.converged;
  }
  if (o.additivity) {
    const AdditivityResult a = additivity_check(tracial_state(ch.shape_in()), ch, limit);
    r.text("additivity.input", "tracial");
    r.info("additivity.lhs", a.lhs);
    r.info("additivity.rhs", a.rhs);
    r.info("additivity.gap", a.gap);
  }
  r.render(out, o.json, o.bits);
  if (o.strict && !converged) {
    err << "qent: error: capacity search did not converge\n";
    return kNotConverged;
  }
  return kOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json, "Emit the report as JSON");
  sub->add_flag("--bits", o.bits, "Report information quantities in bits");
}

void add_optimizer(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "Seed for the random restarts");
  sub->add_option("--restarts", o.restarts, "Number of optimizer restarts")
      ->check(CLI::PositiveNumber);
  sub->add_option("--tol", o.tol, "Convergence tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--max-iters", o.max_iters, "Iteration cap per restart")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--strict", o.strict, "Exit with status 5 when an optimizer does not converge");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Entropies, entangled information and channel capacities", "qent"};
  app.require_subcommand(1);

  auto* entropy = app.add_subcommand("entropy", "Entropy and q-entropy of a state");
  entropy->add_option("file", o.files, "State, coupling or ensemble document")
      ->required()
      ->expected(1);
  add_common(entropy, o);

  auto* relent = app.add_subcommand("relent", "Relative entropies of two states");
  relent->add_option("files", o.files, "The two state documents")->required()->expected(2);
  add_common(relent, o);

  auto* info = app.add_subcommand("channel-info", "Information transmitted by a channel");
  info->add_option("files", o.files, "Channel document, then input state document")
      ->required()
      ->expected(2);
  add_common(info, o);
  add_optimizer(info, o);

  auto* cap = app.add_subcommand("capacity", "q- and c-capacities of a channel");
  cap->add_option("file", o.files, "Channel document")->required()->expected(1);
  add_common(cap, o);
  add_optimizer(cap, o);
  cap->add_flag("--with-cc", o.with_cc, "Also compute the c-capacity");
  cap->add_flag("--additivity", o.additivity, "Check additivity of I_q at the tracial input");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    max_dim_from_env();
  } catch (const CLI::Error& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (entropy->parsed()) return cmd_entropy(o, out);
    if (relent->parsed()) return cmd_relent(o, out);
    if (info->parsed()) return cmd_channel_info(o, out, err);
    return cmd_capacity(o, out, err);
  } catch (const ParseError& e) {
    err << "qent: parse error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const DimensionGuard& e) {
    err << "qent: dimension guard: " << e.what() << '\n';
    return kDimensionGuard;
  } catch (const std::exception& e) {
    err << "qent: invalid input: " << e.what() << '\n';
    return kSemanticFailure;
  }
}

}  // namespace qent::cli
