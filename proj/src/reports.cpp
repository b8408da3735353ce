#include "reports.hpp"

#include <chrono>
#include <stdexcept>

#include "errors.hpp"
#include "isolation.hpp"
#include "lcs_witness.hpp"
#include "pgroups.hpp"
#include "stallings.hpp"
#include "words.hpp"

namespace freesep {

namespace {

using nlohmann::json;

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point start_ = Clock::now();
};

std::vector<Word> parse_words(const Alphabet& alphabet, const std::vector<std::string>& texts) {
  std::vector<Word> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_word(alphabet, t));
  return out;
}

json violation_json(const Alphabet& alphabet, const Violation& v) {
  return json{{"root", format_word(alphabet, v.root)},
              {"exponent", v.exponent},
              {"power_in_subgroup", v.power_in_subgroup},
              {"root_in_subgroup", v.root_in_subgroup}};
}

std::vector<FiniteGroup> parse_targets(const std::string& spec, int p) {
  std::vector<FiniteGroup> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    const std::string item = spec.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    try {
      if (item == "ut3") {
        out.push_back(FiniteGroup::unitriangular(3, p));
      } else if (item == "ut4") {
        out.push_back(FiniteGroup::unitriangular(4, p));
      } else if (item.rfind("cyc", 0) == 0) {
        out.push_back(FiniteGroup::cyclic(p, std::stoi(item.substr(3))));
      } else {
        throw std::invalid_argument("unknown target");
      }
    } catch (const BudgetError&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid target '" + item +
                                  "' (expected ut3, ut4 or cyc<k>)");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty target list");
  return out;
}

}  // namespace

RunResult run_member(int rank, const std::vector<std::string>& gens, const std::string& word) {
  Timer timer;
  Alphabet alphabet(rank);
  const std::vector<Word> gen_words = parse_words(alphabet, gens);
  const Word w = parse_word(alphabet, word);
  const SubgroupGraph graph = SubgroupGraph::build(alphabet, gen_words);
  const bool member = graph.contains(w);

  json report{
      {"command", "member"},
      {"parameters", {{"rank", rank}, {"gens", gens}, {"word", word}}},
      {"outcome", member ? "member" : "non-member"},
      {"counters",
       {{"graph_vertices", graph.vertex_count()}, {"word_length", w.size()}}},
      {"witnesses", json::array()},
      {"elapsed_ms", timer.ms()}};
  return RunResult{std::move(report), 0};
}

RunResult run_isolated(int rank, const std::vector<std::string>& gens, int max_len,
                       std::vector<int> exponents, int pprime, int threads,
                       std::size_t max_witnesses) {
  Timer timer;
  Alphabet alphabet(rank);
  const std::vector<Word> gen_words = parse_words(alphabet, gens);
  const SubgroupGraph graph = SubgroupGraph::build(alphabet, gen_words);

  ScanBounds bounds{max_len, std::move(exponents)};
  const std::vector<Violation> violations =
      pprime > 0 ? p_prime_isolation_scan(graph, pprime, bounds, threads)
                 : isolation_scan(graph, bounds, threads);

  std::vector<int> exps_used = bounds.exponents;
  if (pprime > 0) {
    exps_used.clear();
    for (int q : bounds.exponents) {
      if (is_prime(q) && q != pprime) exps_used.push_back(q);
    }
  }

  json witnesses = json::array();
  for (std::size_t i = 0; i < violations.size() && i < max_witnesses; ++i) {
    witnesses.push_back(violation_json(alphabet, violations[i]));
  }

  json report{
      {"command", "isolated"},
      {"parameters",
       {{"rank", rank},
        {"gens", gens},
        {"max_len", max_len},
        {"exponents", exps_used},
        {"pprime", pprime > 0 ? json(pprime) : json(nullptr)}}},
      {"outcome", violations.empty() ? "no-violations" : "violations-found"},
      {"counters",
       {{"graph_vertices", graph.vertex_count()},
        {"words_scanned", reduced_word_count(rank, max_len)},
        {"violations_found", violations.size()},
        {"violations_listed", witnesses.size()},
        {"witnesses_truncated", violations.size() > max_witnesses}}},
      {"witnesses", std::move(witnesses)},
      {"elapsed_ms", timer.ms()}};
  return RunResult{std::move(report), violations.empty() ? 0 : 1};
}

RunResult run_witness(int n_max) {
  Timer timer;
  const Alphabet a_alphabet = witness_alphabet();
  const Alphabet x_alphabet(2);
  const std::vector<WitnessReport> reports = nilpotent_image_equality(n_max);

  json witnesses = json::array();
  for (const auto& r : reports) {
    witnesses.push_back(json{{"n", r.n},
                             {"witness", format_word(a_alphabet, r.witness)},
                             {"expanded", format_word(x_alphabet, r.expanded)},
                             {"witness_length", r.witness.size()},
                             {"expanded_length", r.expanded.size()},
                             {"discrepancy_weight_at_least", r.discrepancy_weight_at_least},
                             {"certified", true}});
  }

  json report{{"command", "witness"},
              {"parameters", {{"n_max", n_max}}},
              {"outcome", "certified"},
              {"counters", {{"reports", reports.size()}}},
              {"witnesses", std::move(witnesses)},
              {"elapsed_ms", timer.ms()}};
  return RunResult{std::move(report), 0};
}

RunResult run_psep(int rank, const std::vector<std::string>& gens, const std::string& exclude,
                   int p, const std::string& targets, std::uint64_t budget, int threads) {
  Timer timer;
  if (!is_prime(p)) {
    throw std::invalid_argument("psep: " + std::to_string(p) + " is not prime");
  }
  Alphabet alphabet(rank);
  const std::vector<Word> gen_words = parse_words(alphabet, gens);
  const Word f = parse_word(alphabet, exclude);
  const std::string spec = targets.empty() ? kDefaultTargets : targets;
  const std::vector<FiniteGroup> target_groups = parse_targets(spec, p);
  if (budget == 0) budget = kDefaultHomBudget;

  const SeparabilityReport result =
      separability_scan(alphabet, gen_words, f, target_groups, budget, threads);

  json per_target = json::array();
  for (const auto& tc : result.targets) {
    per_target.push_back(
        json{{"target", tc.target}, {"homs", tc.homs}, {"separating", tc.separating}});
  }
  json witnesses = json::array();
  if (result.first_separating) {
    const Homomorphism& h = *result.first_separating;
    json images;
    for (int g = 0; g < alphabet.rank(); ++g) {
      images[std::string(1, alphabet.name(g))] = h.images[static_cast<std::size_t>(g)];
    }
    witnesses.push_back(json{{"target", h.target.name()}, {"images", std::move(images)}});
  }

  json report{
      {"command", "psep"},
      {"parameters",
       {{"rank", rank},
        {"gens", gens},
        {"exclude", exclude},
        {"p", p},
        {"targets", spec},
        {"budget", budget}}},
      {"outcome",
       result.homs_separating == 0 ? "no-separating-hom" : "separating-hom-found"},
      {"counters",
       {{"targets_scanned", result.targets.size()},
        {"homs_total", result.homs_total},
        {"homs_separating", result.homs_separating},
        {"per_target", std::move(per_target)}}},
      {"witnesses", std::move(witnesses)},
      {"elapsed_ms", timer.ms()}};
  return RunResult{std::move(report), result.homs_separating == 0 ? 0 : 1};
}

RunResult run_separate(int rank, const std::vector<std::string>& gens, const std::string& word) {
  Timer timer;
  Alphabet alphabet(rank);
  const std::vector<Word> gen_words = parse_words(alphabet, gens);
  const Word w = parse_word(alphabet, word);
  const SubgroupGraph graph = SubgroupGraph::build(alphabet, gen_words);
  const PermutationRep rep = separating_permutation_rep(graph, w);

  json perms;
  for (int g = 0; g < alphabet.rank(); ++g) {
    perms[std::string(1, alphabet.name(g))] = rep.images[static_cast<std::size_t>(g)];
  }
  json report{
      {"command", "separate"},
      {"parameters", {{"rank", rank}, {"gens", gens}, {"word", word}}},
      {"outcome", "separated"},
      {"counters",
       {{"degree", rep.degree}, {"graph_vertices", graph.vertex_count()}}},
      {"witnesses",
       json::array({json{{"degree", rep.degree},
                         {"basepoint", 0},
                         {"word_image", rep.apply(0, w)},
                         {"permutations", std::move(perms)}}})},
      {"elapsed_ms", timer.ms()}};
  return RunResult{std::move(report), 0};
}

}  // namespace freesep
