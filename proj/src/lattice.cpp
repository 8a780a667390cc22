#include "jh/lattice.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

#include "jh/error.hpp"

namespace jh {

DivisorLattice complexity_space(Natural cy) {
  if (cy == 0) throw DomainError("lattice modulus must be positive");
  const PrimeFactorization f = factorize(cy);
  DivisorLattice l{cy, divisors(f), {}, f.factors().size()};
  for (Natural d : l.nodes) {
    for (const auto& pf : f.factors()) {
      if (valuation(d, pf.prime) < pf.exponent) l.edges.push_back({d, d * pf.prime, pf.prime});
    }
  }
  return l;
}

std::vector<Natural> embed_chord(const DivisorLattice& l, const Chord& c) {
  const Chord reduced = normalize(c);
  std::vector<Natural> out;
  for (Natural note : reduced.notes()) {
    if (l.modulus % note != 0) {
      throw DomainError("chord " + render(c) + " does not embed in the lattice of " +
                        to_string(l.modulus));
    }
    out.push_back(note);
  }
  return out;
}

bool is_complete_chord(const Chord& c) {
  const Chord reduced = normalize(c);
  const Natural cy = lcm_set(reduced.notes());
  if (divisor_count(cy) != reduced.size()) return false;
  // Every reduced note divides its LCM, so equal counts mean equal sets.
  return true;
}

std::vector<OddDivisorRecord> ohcn_up_to(std::uint64_t limit) {
  if (limit == 0) throw DomainError("limit must be positive");
  // d(n) for odd n, indexed by n / 2.
  std::vector<std::uint32_t> count((limit + 1) / 2, 0);
  for (std::uint64_t d = 1; d <= limit; d += 2) {
    for (std::uint64_t m = d; m <= limit; m += 2 * d) ++count[m / 2];
  }
  std::vector<OddDivisorRecord> out;
  std::uint32_t best = 0;
  for (std::size_t i = 0; i < count.size(); ++i) {
    if (count[i] > best) {
      best = count[i];
      out.push_back({static_cast<Natural>(2 * i + 1), best});
    }
  }
  return out;
}

namespace {

Natural next_prime(Natural p) {
  for (Natural q = p + 1;; ++q) {
    if (is_prime(q)) return q;
  }
}

void extend_shapes(Natural limit, Natural prime, unsigned max_exponent, Natural value,
                   std::vector<unsigned>& exps, std::vector<LatticeShape>& out) {
  Natural power = value;
  for (unsigned e = 1; e <= max_exponent; ++e) {
    if (power > limit / prime) break;
    power *= prime;
    exps.push_back(e);
    out.push_back({exps, power});
    extend_shapes(limit, next_prime(prime), e, power, exps, out);
    exps.pop_back();
  }
}

}  // namespace

std::vector<LatticeShape> lattice_shapes_up_to(Natural limit) {
  if (limit == 0) throw DomainError("limit must be positive");
  std::vector<LatticeShape> out{{{}, 1}};
  std::vector<unsigned> exps;
  extend_shapes(limit, 3, ~0u, 1, exps, out);
  std::sort(out.begin(), out.end(),
            [](const LatticeShape& a, const LatticeShape& b) { return a.first_occurrence < b.first_occurrence; });
  return out;
}

LatticeFormat parse_lattice_format(std::string_view name) {
  if (name == "dot") return LatticeFormat::kDot;
  if (name == "json") return LatticeFormat::kJson;
  throw ParseError("unsupported lattice format '" + std::string(name) + "'");
}

namespace {

std::string prime_color(Natural prime) {
  if (prime == 2) return "blue";
  if (prime == 3) return "red";
  if (prime == 5) return "green";
  static constexpr std::array<const char*, 6> kPalette = {"orange", "purple", "brown",
                                                          "magenta", "cyan", "gold"};
  // 7 is the fourth prime; count primes from there to pick a slot.
  std::size_t index = 0;
  for (Natural q = 7; q < prime; q = next_prime(q)) ++index;
  return kPalette[index % kPalette.size()];
}

nlohmann::json natural_json(Natural n) {
  if (n <= static_cast<Natural>(UINT64_MAX)) return static_cast<std::uint64_t>(n);
  return to_string(n);
}

}  // namespace

std::string export_lattice(const DivisorLattice& l, const std::vector<Natural>& highlight,
                           LatticeFormat format) {
  std::vector<Natural> marked = highlight;
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
  const auto is_marked = [&](Natural n) { return std::binary_search(marked.begin(), marked.end(), n); };

  if (format == LatticeFormat::kJson) {
    nlohmann::json j;
    j["modulus"] = natural_json(l.modulus);
    j["nodes"] = nlohmann::json::array();
    for (Natural n : l.nodes) j["nodes"].push_back(natural_json(n));
    j["edges"] = nlohmann::json::array();
    for (const auto& e : l.edges) {
      j["edges"].push_back({{"from", natural_json(e.from)}, {"to", natural_json(e.to)},
                            {"prime", natural_json(e.prime)}});
    }
    j["highlight"] = nlohmann::json::array();
    for (Natural n : marked) j["highlight"].push_back(natural_json(n));
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "graph lattice_" << to_string(l.modulus) << " {\n";
  for (Natural n : l.nodes) {
    os << "  " << to_string(n);
    if (is_marked(n)) os << " [style=filled, fillcolor=lightgreen]";
    os << ";\n";
  }
  for (const auto& e : l.edges) {
    os << "  " << to_string(e.from) << " -- " << to_string(e.to) << " [prime=" << to_string(e.prime)
       << ", color=" << prime_color(e.prime) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace jh
