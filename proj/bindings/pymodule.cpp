#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lucaskit/bench.hpp"
#include "lucaskit/congruences.hpp"
#include "lucaskit/identities.hpp"
#include "lucaskit/lucas.hpp"
#include "lucaskit/modarith.hpp"
#include "lucaskit/render.hpp"
#include "lucaskit/symmetry.hpp"

namespace py = pybind11;

namespace {

using namespace lucaskit;

py::object to_pyint(const BigInt& z) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::tuple factor_tuple(const symmetry::SignedBinom& f) {
  // (sign, top, bottom); sign 0 marks an exactly-zero factor
  return py::make_tuple(f.zero ? 0 : f.sign, f.top, f.bottom);
}

identities::IdentityId parse_identity(const std::string& name) {
  const auto id = identities::identity_from_name(name);
  if (!id) throw std::invalid_argument("unknown identity: " + name);
  return *id;
}

py::dict identity_dict(const identities::IdentityReport& rep) {
  py::dict d;
  d["name"] = std::string(identities::identity_name(rep.id));
  d["params"] = rep.params;
  d["lhs"] = rep.lhs.get_str();
  d["rhs"] = rep.rhs.get_str();
  d["holds"] = rep.holds;
  if (rep.lift_prime) d["lift_prime"] = to_pyint(*rep.lift_prime);
  return d;
}

py::dict congruence_dict(const congruences::CongruenceReport& rep) {
  py::dict d;
  d["theorem"] = rep.theorem;
  d["prime"] = rep.prime;
  d["params"] = rep.params;
  py::list sides;
  for (const auto& s : rep.sides) sides.append(s.value());
  d["sides"] = sides;
  if (rep.expected) d["expected"] = rep.expected->value();
  d["holds"] = rep.holds;
  d["note"] = rep.note;
  return d;
}

}  // namespace

PYBIND11_MODULE(_lucaskit, m) {
  m.doc() = "Binomial coefficients modulo a prime via symmetry reductions";
  m.attr("__version__") = "0.1.0";

  m.def("is_prime", [](std::uint64_t n) { return modarith::is_prime(n); }, py::arg("n"));

  m.def("leibniz_prime_test",
        [](std::uint64_t n) { return modarith::leibniz_prime_test(n); }, py::arg("n"),
        "primality via the alternating-sign row criterion (exact, n <= 10^4)");

  m.def("binom_exact",
        [](std::int64_t m, std::int64_t k) { return to_pyint(modarith::binom_exact(m, k)); },
        py::arg("m"), py::arg("k"));

  m.def("mod_inverse",
        [](std::uint64_t a, std::uint64_t p) {
          return modarith::mod_inverse(modarith::Residue(a, modarith::PrimeModulus(p))).value();
        },
        py::arg("a"), py::arg("p"));

  m.def("fib_mod",
        [](std::uint64_t n, std::uint64_t p) {
          return modarith::fib_mod(n, modarith::PrimeModulus(p)).value();
        },
        py::arg("n"), py::arg("p"));

  m.def("binom_mod",
        [](std::uint64_t m, std::uint64_t k, std::uint64_t p, const std::string& method) {
          const modarith::PrimeModulus pm(p);
          if (method == "table") {
            return modarith::binom_mod_table(m, k, *modarith::FactorialTable::shared(pm)).value();
          }
          if (method == "extended") return lucas::extended_lucas_mod(m, k, pm).value.value();
          if (method == "lucas") return lucas::lucas_mod(m, k, pm).value();
          throw std::invalid_argument("method must be table, lucas or extended");
        },
        py::arg("m"), py::arg("k"), py::arg("p"), py::arg("method") = "lucas");

  m.def("digits",
        [](std::uint64_t m, std::uint64_t p) {
          return lucas::digits(m, modarith::PrimeModulus(p)).digits;
        },
        py::arg("m"), py::arg("p"), "little-endian base-p digits");

  m.def("extended_factors",
        [](std::uint64_t m, std::uint64_t k, std::uint64_t p) {
          const auto f = lucas::extended_lucas_mod(m, k, modarith::PrimeModulus(p));
          py::list factors;
          for (const auto& factor : f.factors) factors.append(factor_tuple(factor));
          py::dict d;
          d["value"] = f.value.value();
          d["factors"] = factors;  // little-endian, one per digit
          return d;
        },
        py::arg("m"), py::arg("k"), py::arg("p"));

  m.def("reduce_canonical",
        [](std::uint64_t m, std::uint64_t k, std::uint64_t p) {
          return factor_tuple(symmetry::reduce_canonical(m, k, modarith::PrimeModulus(p)));
        },
        py::arg("m"), py::arg("k"), py::arg("p"));

  m.def("reduce_trace",
        [](std::uint64_t m, std::uint64_t k, std::uint64_t p) {
          const auto trace = symmetry::reduce_trace(m, k, modarith::PrimeModulus(p));
          py::list steps;
          for (const auto& [rule, state] : trace.steps) {
            steps.append(py::make_tuple(std::string(symmetry::rule_name(rule)),
                                        state.sign, state.top, state.bottom));
          }
          return steps;
        },
        py::arg("m"), py::arg("k"), py::arg("p"));

  m.def("classify_region",
        [](std::uint64_t m, std::uint64_t k, std::uint64_t p) {
          const auto r = symmetry::classify_region(m, k, modarith::PrimeModulus(p));
          py::dict d;
          d["regions"] = r.region_letters();
          d["lines"] = r.line_labels();
          return d;
        },
        py::arg("m"), py::arg("k"), py::arg("p"));

  m.def("harmonic_mod",
        [](std::uint64_t p, std::uint64_t upper) {
          return congruences::harmonic_mod(modarith::PrimeModulus(p), upper).value();
        },
        py::arg("p"), py::arg("upper"));

  m.def("verify_identity",
        [](const std::string& name, const std::vector<std::int64_t>& params) {
          return identity_dict(identities::evaluate(parse_identity(name), params));
        },
        py::arg("name"), py::arg("params"));

  m.def("duality_check",
        [](const std::string& name, const std::vector<std::int64_t>& params) {
          return identity_dict(identities::duality_check(parse_identity(name), params));
        },
        py::arg("name"), py::arg("params"),
        "prime-lift verification; the result carries the lift prime used");

  m.def("verify_congruence",
        [](const std::string& name, std::uint64_t p, std::optional<std::int64_t> param) {
          const modarith::PrimeModulus pm(p);
          if (name == "thm41") return congruence_dict(congruences::thm41_check(pm, param.value_or(0)));
          if (name == "thm42") return congruence_dict(congruences::thm42_eval(pm, param.value_or(0)));
          if (name == "thm43") return congruence_dict(congruences::thm43_eval(pm));
          if (name == "fib") return congruence_dict(congruences::fib_identity_check(param.value_or(1), pm));
          throw std::invalid_argument("unknown congruence: " + name);
        },
        py::arg("name"), py::arg("p"), py::arg("param") = std::nullopt);

  m.def("triangle",
        [](std::uint64_t p, const std::string& format, bool annotate) {
          const auto fmt = format == "csv" ? render::Format::csv : render::Format::ascii;
          return render::triangle(modarith::PrimeModulus(p), fmt, annotate);
        },
        py::arg("p"), py::arg("format") = "ascii", py::arg("annotate") = false);

  m.def("bench",
        [](std::uint64_t p, std::uint64_t count, unsigned bits, std::uint64_t seed) {
          bench::Options options{p, count, bits, seed};
          const auto result = bench::run(options);
          py::dict d;
          d["lucas_ns"] = result.lucas_ns;
          d["extended_ns"] = result.extended_ns;
          d["table_ns"] = result.table_ns;
          d["samples"] = result.samples;
          d["table_samples"] = result.table_samples;
          d["max_reduced_bottom"] = result.max_reduced_bottom;
          d["factors_top_ge_p"] = result.factors_top_ge_p;
          d["agree"] = result.agree;
          return d;
        },
        py::arg("p"), py::arg("count") = 10000, py::arg("bits") = 40, py::arg("seed") = 1);
}
