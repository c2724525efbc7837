#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etaq/eta.hpp"
#include "etaq/hauptmodul.hpp"
#include "etaq/parity.hpp"
#include "etaq/serialize.hpp"
#include "etaq/suites.hpp"

namespace py = pybind11;

namespace etaq {
namespace {

py::int_ to_py(const mpz_class& z) {
  PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

mpz_class to_mpz(const py::int_& v) {
  return mpz_class(py::str(v).cast<std::string>());
}

py::object json_to_py(const ordered_json& j) {
  if (j.is_null()) return py::none();
  if (j.is_boolean()) return py::bool_(j.get<bool>());
  if (j.is_number_unsigned()) return py::int_(j.get<unsigned long long>());
  if (j.is_number_integer()) return py::int_(j.get<long long>());
  if (j.is_number_float()) return py::float_(j.get<double>());
  if (j.is_string()) return py::str(j.get<std::string>());
  if (j.is_array()) {
    py::list out;
    for (const auto& item : j) out.append(json_to_py(item));
    return out;
  }
  py::dict out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out[py::str(it.key())] = json_to_py(it.value());
  return out;
}

}  // namespace
}  // namespace etaq

PYBIND11_MODULE(etaq, m) {
  using namespace etaq;

  m.doc() = "Truncated q-series arithmetic and parity verification for hauptmoduln";
  m.attr("__version__") = "0.1.0";
  m.attr("SUPPORTED_LEVELS") = py::make_tuple(2, 3, 4, 5, 7, 13);

  py::register_exception<QueryBeyondPrecision>(m, "QueryBeyondPrecision", PyExc_IndexError);
  py::register_exception<NonUnitLeadingCoefficient>(m, "NonUnitLeadingCoefficient",
                                                    PyExc_ValueError);
  py::register_exception<FractionalPrefactor>(m, "FractionalPrefactor", PyExc_ValueError);
  py::register_exception<ExponentOverflow>(m, "ExponentOverflow", PyExc_OverflowError);
  py::register_exception<UnsupportedLevel>(m, "UnsupportedLevel", PyExc_ValueError);
  py::register_exception<UnsupportedFamily>(m, "UnsupportedFamily", PyExc_ValueError);

  // ----- series ------------------------------------------------------------

  py::class_<Gf2Series>(m, "Gf2Series")
      .def_static("zero", &Gf2Series::zero, py::arg("val"), py::arg("valid_to"))
      .def_static("one", &Gf2Series::one, py::arg("valid_to"))
      .def_static("from_support", &Gf2Series::from_support, py::arg("val"), py::arg("valid_to"),
                  py::arg("exponents"))
      .def_property_readonly("val", &Gf2Series::val)
      .def_property_readonly("valid_to", &Gf2Series::valid_to)
      .def("coeff", &Gf2Series::coeff, py::arg("n"))
      .def("popcount", &Gf2Series::popcount)
      .def("support", &Gf2Series::support, py::arg("lo"), py::arg("hi"))
      .def("truncated", &Gf2Series::truncated, py::arg("valid_to"))
      .def("shifted", &Gf2Series::shifted, py::arg("k"))
      .def("dilated", &Gf2Series::dilated, py::arg("m"))
      .def("inverse", &Gf2Series::inverse)
      .def("pow", &Gf2Series::pow, py::arg("k"))
      .def("with_flipped_bit", &Gf2Series::with_flipped_bit, py::arg("n"))
      .def(py::self + py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const Gf2Series& s) {
        return "<Gf2Series val=" + std::to_string(s.val()) +
               " valid_to=" + std::to_string(s.valid_to()) +
               " popcount=" + std::to_string(s.popcount()) + ">";
      });

  py::class_<IntSeries>(m, "IntSeries")
      .def(py::init([](Exp val, const std::vector<py::int_>& coeffs) {
             std::vector<mpz_class> c;
             c.reserve(coeffs.size());
             for (const auto& x : coeffs) c.push_back(to_mpz(x));
             return IntSeries(val, std::move(c));
           }),
           py::arg("val"), py::arg("coeffs"))
      .def_static("zero", &IntSeries::zero, py::arg("val"), py::arg("valid_to"))
      .def_static("one", &IntSeries::one, py::arg("valid_to"))
      .def_static(
          "constant",
          [](const py::int_& v, Exp valid_to) { return IntSeries::constant(to_mpz(v), valid_to); },
          py::arg("value"), py::arg("valid_to"))
      .def_static(
          "monomial",
          [](const py::int_& v, Exp e, Exp valid_to) {
            return IntSeries::monomial(to_mpz(v), e, valid_to);
          },
          py::arg("value"), py::arg("exponent"), py::arg("valid_to"))
      .def_property_readonly("val", &IntSeries::val)
      .def_property_readonly("valid_to", &IntSeries::valid_to)
      .def("coeff", [](const IntSeries& s, Exp n) { return to_py(s.coeff(n)); }, py::arg("n"))
      .def("coeffs",
           [](const IntSeries& s) {
             py::list out;
             for (const auto& c : s.coeffs()) out.append(to_py(c));
             return out;
           })
      .def("nonzero_count", &IntSeries::nonzero_count)
      .def("truncated", &IntSeries::truncated, py::arg("valid_to"))
      .def("shifted", &IntSeries::shifted, py::arg("k"))
      .def("dilated", &IntSeries::dilated, py::arg("m"))
      .def("inverse", &IntSeries::inverse)
      .def("pow", &IntSeries::pow, py::arg("k"))
      .def(
          "scaled", [](const IntSeries& s, const py::int_& c) { return s.scaled(to_mpz(c)); },
          py::arg("c"))
      .def(py::self + py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const IntSeries& s) {
        return "<IntSeries val=" + std::to_string(s.val()) +
               " valid_to=" + std::to_string(s.valid_to()) + ">";
      });

  m.def("gf2_square", &gf2_square, py::arg("a"));
  m.def("inverse_naive", &inverse_naive, py::arg("a"));
  m.def("reduce_mod2", &reduce_mod2, py::arg("a"));
  m.def("agree_on",
        py::overload_cast<const Gf2Series&, const Gf2Series&, Exp, Exp>(&agree_on), py::arg("a"),
        py::arg("b"), py::arg("lo"), py::arg("hi"));
  m.def("agree_on",
        py::overload_cast<const IntSeries&, const IntSeries&, Exp, Exp>(&agree_on), py::arg("a"),
        py::arg("b"), py::arg("lo"), py::arg("hi"));

  // ----- eta engine ---------------------------------------------------------

  py::enum_<ExpansionMethod>(m, "ExpansionMethod")
      .value("FAST", ExpansionMethod::FAST)
      .value("NAIVE_PRODUCT", ExpansionMethod::NAIVE_PRODUCT);

  py::class_<EtaQuotient>(m, "EtaQuotient")
      .def(py::init([](std::vector<std::pair<Exp, Exp>> factors) {
             return EtaQuotient{std::move(factors)};
           }),
           py::arg("factors"))
      .def_readwrite("factors", &EtaQuotient::factors)
      .def("prefactor_exponent", &EtaQuotient::prefactor_exponent);

  m.def("euler_product_expand", &euler_product_expand, py::arg("d"), py::arg("e"),
        py::arg("precision"), py::call_guard<py::gil_scoped_release>());
  m.def("pentagonal_expand", &pentagonal_expand, py::arg("precision"),
        py::call_guard<py::gil_scoped_release>());
  m.def("jacobi_cube_expand", &jacobi_cube_expand, py::arg("precision"),
        py::call_guard<py::gil_scoped_release>());
  m.def("eta_quotient_expand", &eta_quotient_expand, py::arg("quotient"), py::arg("precision"),
        py::arg("method") = ExpansionMethod::FAST, py::call_guard<py::gil_scoped_release>());
  m.def("eta_quotient_expand_gf2", &eta_quotient_expand_gf2, py::arg("quotient"),
        py::arg("precision"), py::call_guard<py::gil_scoped_release>());
  m.def("eisenstein_e4", &eisenstein_e4, py::arg("precision"),
        py::call_guard<py::gil_scoped_release>());

  // ----- catalog ------------------------------------------------------------

  py::enum_<HauptKind>(m, "HauptKind")
      .value("J", HauptKind::J)
      .value("J_LEVEL", HauptKind::J_LEVEL)
      .value("J_PLUS", HauptKind::J_PLUS)
      .value("F_PLUS", HauptKind::F_PLUS)
      .value("G_PLUS", HauptKind::G_PLUS);

  py::class_<HauptmodulId>(m, "HauptmodulId")
      .def(py::init([](HauptKind kind, int level) { return HauptmodulId{kind, level}; }),
           py::arg("kind"), py::arg("level") = 0)
      .def(py::init(&parse_hauptmodul_id), py::arg("name"))
      .def_readwrite("kind", &HauptmodulId::kind)
      .def_readwrite("level", &HauptmodulId::level)
      .def(py::self == py::self)
      .def("__str__", [](const HauptmodulId& id) { return to_string(id); })
      .def("__repr__",
           [](const HauptmodulId& id) { return "HauptmodulId('" + to_string(id) + "')"; });

  py::implicitly_convertible<py::str, HauptmodulId>();

  m.def("parse_hauptmodul_id", &parse_hauptmodul_id, py::arg("name"));
  m.def("require_level", &require_level, py::arg("level"));
  m.def("quotient_exponent", &quotient_exponent, py::arg("level"));
  m.def("fricke_scale", [](int N) { return to_py(fricke_scale(N)); }, py::arg("level"));
  m.def("f_plus_quotient", &f_plus_quotient, py::arg("level"));
  m.def("g_plus_quotient", &g_plus_quotient, py::arg("level"));

  py::class_<CatalogEntry>(m, "CatalogEntry")
      .def_readonly("id", &CatalogEntry::id)
      .def_readonly("precision", &CatalogEntry::precision)
      .def_property_readonly("bits", [](const CatalogEntry& e) { return *e.bits; })
      .def_property_readonly("ints", [](const CatalogEntry& e) -> std::optional<IntSeries> {
        if (!e.ints) return std::nullopt;
        return *e.ints;
      });

  py::class_<Catalog>(m, "Catalog")
      .def(py::init<Exp, bool>(), py::arg("int_cap") = 20000, py::arg("oracle") = false)
      .def("expand", &Catalog::expand, py::arg("id"), py::arg("precision"),
           py::call_guard<py::gil_scoped_release>())
      .def("expand_ints", &Catalog::expand_ints, py::arg("id"), py::arg("precision"),
           py::call_guard<py::gil_scoped_release>())
      .def("coeff_parity", &Catalog::coeff_parity, py::arg("id"), py::arg("n"),
           py::arg("precision"), py::call_guard<py::gil_scoped_release>())
      .def_property_readonly("int_cap", &Catalog::int_cap)
      .def_property_readonly("oracle", &Catalog::oracle)
      .def("fork_with_bit_flip", &Catalog::fork_with_bit_flip, py::arg("id"), py::arg("n"));

  // ----- quadratic forms and lemmas ------------------------------------------

  py::enum_<FormShape>(m, "FormShape")
      .value("OBLONG", FormShape::OBLONG)
      .value("PENT_MINUS", FormShape::PENT_MINUS)
      .value("PENT_PLUS", FormShape::PENT_PLUS);

  py::class_<QuadraticFormId>(m, "QuadraticFormId")
      .def(py::init([](FormShape shape, Exp scale) { return QuadraticFormId{shape, scale}; }),
           py::arg("shape"), py::arg("scale") = 1)
      .def_readwrite("shape", &QuadraticFormId::shape)
      .def_readwrite("scale", &QuadraticFormId::scale)
      .def(py::self == py::self)
      .def("__str__", [](const QuadraticFormId& f) { return to_string(f); })
      .def("__repr__",
           [](const QuadraticFormId& f) { return "<QuadraticFormId " + to_string(f) + ">"; });

  m.def("solve_form", &solve_form, py::arg("form"), py::arg("m"));

  py::enum_<LemmaId>(m, "LemmaId")
      .value("A3", LemmaId::A3)
      .value("B3", LemmaId::B3)
      .value("A7", LemmaId::A7)
      .value("B7", LemmaId::B7);

  py::class_<LemmaSpec>(m, "LemmaSpec")
      .def_readonly("id", &LemmaSpec::id)
      .def_readonly("series", &LemmaSpec::series)
      .def_readonly("n_lo", &LemmaSpec::n_lo)
      .def_readonly("rhs_offset", &LemmaSpec::rhs_offset)
      .def_readonly("rhs_forms", &LemmaSpec::rhs_forms);

  m.def("parse_lemma_id", &parse_lemma_id, py::arg("name"));
  m.def("lemma_spec", &lemma_spec, py::arg("lemma"));
  m.def("lemma_shifts", &lemma_shifts, py::arg("lemma"), py::arg("max_shift"));
  m.def("lemma_lhs", &lemma_lhs, py::arg("catalog"), py::arg("lemma"), py::arg("n"),
        py::arg("precision"));
  m.def("lemma_rhs", &lemma_rhs, py::arg("lemma"), py::arg("n"));

  py::class_<LemmaReport>(m, "LemmaReport")
      .def_readonly("id", &LemmaReport::id)
      .def_readonly("n_lo", &LemmaReport::n_lo)
      .def_readonly("n_hi", &LemmaReport::n_hi)
      .def_readonly("counterexamples", &LemmaReport::counterexamples)
      .def_property_readonly("ok", &LemmaReport::ok)
      .def("as_dict", [](const LemmaReport& r) { return json_to_py(to_json(r)); })
      .def("__repr__", [](const LemmaReport& r) {
        return "<LemmaReport " + to_string(r.id) + " ok=" + (r.ok() ? "True" : "False") + ">";
      });

  m.def(
      "verify_lemma",
      [](Catalog& catalog, LemmaId lemma, Exp n_max, Exp precision, int threads) {
        py::gil_scoped_release release;
        return verify_lemma(catalog, lemma, n_max, precision, threads);
      },
      py::arg("catalog"), py::arg("lemma"), py::arg("n_max"), py::arg("precision") = -1,
      py::arg("threads") = 1);
  m.def(
      "verify_lemma",
      [](Catalog& catalog, const std::string& lemma, Exp n_max, Exp precision, int threads) {
        LemmaId id = parse_lemma_id(lemma);
        py::gil_scoped_release release;
        return verify_lemma(catalog, id, n_max, precision, threads);
      },
      py::arg("catalog"), py::arg("lemma"), py::arg("n_max"), py::arg("precision") = -1,
      py::arg("threads") = 1);

  // ----- interval claims ------------------------------------------------------

  py::enum_<ParityKind>(m, "ParityKind")
      .value("ODD", ParityKind::ODD)
      .value("EVEN", ParityKind::EVEN);

  py::enum_<FamilyId::Group>(m, "FamilyGroup")
      .value("COR21", FamilyId::Group::COR21)
      .value("T31", FamilyId::Group::T31)
      .value("T32", FamilyId::Group::T32)
      .value("T41", FamilyId::Group::T41)
      .value("T42", FamilyId::Group::T42)
      .value("TABLE5", FamilyId::Group::TABLE5);

  py::class_<FamilyId>(m, "FamilyId")
      .def(py::init([](FamilyId::Group group, ParityKind parity, HauptmodulId series) {
             return FamilyId{group, parity, series};
           }),
           py::arg("group"), py::arg("parity"), py::arg("series"))
      .def(py::init(&parse_family_id), py::arg("name"))
      .def_readwrite("group", &FamilyId::group)
      .def_readwrite("parity", &FamilyId::parity)
      .def_readwrite("series", &FamilyId::series)
      .def(py::self == py::self)
      .def("__str__", [](const FamilyId& f) { return to_string(f); })
      .def("__repr__", [](const FamilyId& f) { return "FamilyId('" + to_string(f) + "')"; });

  py::implicitly_convertible<py::str, FamilyId>();

  m.def("parse_family_id", &parse_family_id, py::arg("name"));
  m.def("theorem_families", &theorem_families);
  m.def("table_families", &table_families);

  py::class_<Hypothesis>(m, "Hypothesis")
      .def_readonly("value", &Hypothesis::value)
      .def_readonly("forms", &Hypothesis::forms)
      .def_readonly("display", &Hypothesis::display)
      .def("__repr__", [](const Hypothesis& h) { return "<Hypothesis " + h.display + ">"; });

  py::class_<IntervalClaim>(m, "IntervalClaim")
      .def_readonly("family", &IntervalClaim::family)
      .def_readonly("t", &IntervalClaim::t)
      .def_readonly("lo", &IntervalClaim::lo)
      .def_readonly("hi", &IntervalClaim::hi)
      .def_readonly("modulus", &IntervalClaim::modulus)
      .def_readonly("residue", &IntervalClaim::residue)
      .def_readonly("expected", &IntervalClaim::expected)
      .def_readonly("hypothesis", &IntervalClaim::hypothesis)
      .def_readonly("proof_positions", &IntervalClaim::proof_positions)
      .def_readonly("interval_display", &IntervalClaim::interval_display)
      .def_readonly("progression_display", &IntervalClaim::progression_display)
      .def("__repr__", [](const IntervalClaim& c) {
        return "<IntervalClaim " + to_string(c.family) + " t=" + std::to_string(c.t) + " [" +
               std::to_string(c.lo) + "," + std::to_string(c.hi) + "]>";
      });

  m.def("make_claim", py::overload_cast<const FamilyId&, Exp>(&make_claim), py::arg("family"),
        py::arg("t"));

  py::enum_<Verdict>(m, "Verdict")
      .value("PASS", Verdict::PASS)
      .value("HYPOTHESIS_SKIPPED", Verdict::HYPOTHESIS_SKIPPED)
      .value("FAIL", Verdict::FAIL);

  py::class_<WitnessReport>(m, "WitnessReport")
      .def_readonly("claim", &WitnessReport::claim)
      .def_readonly("hypothesis_holds", &WitnessReport::hypothesis_holds)
      .def_readonly("witnesses", &WitnessReport::witnesses)
      .def_readonly("proof_position_witnesses", &WitnessReport::proof_position_witnesses)
      .def_readonly("verdict", &WitnessReport::verdict)
      .def("as_dict", [](const WitnessReport& r) { return json_to_py(to_json(r)); })
      .def("__repr__", [](const WitnessReport& r) {
        return "<WitnessReport " + to_string(r.claim.family) + " t=" + std::to_string(r.claim.t) +
               " " + to_string(r.verdict) + ">";
      });

  m.def("check_claim", &check_claim, py::arg("catalog"), py::arg("claim"),
        py::arg("precision") = -1, py::call_guard<py::gil_scoped_release>());

  py::class_<FamilySummary>(m, "FamilySummary")
      .def_readonly("family", &FamilySummary::family)
      .def_readonly("t_max", &FamilySummary::t_max)
      .def_readonly("passed", &FamilySummary::pass)
      .def_readonly("skipped", &FamilySummary::skipped)
      .def_readonly("failed", &FamilySummary::failed)
      .def_readonly("skipped_t", &FamilySummary::skipped_t)
      .def_readonly("failure", &FamilySummary::failure)
      .def_property_readonly("ok", &FamilySummary::ok)
      .def("as_dict", [](const FamilySummary& s) { return json_to_py(to_json(s)); })
      .def("__repr__", [](const FamilySummary& s) {
        return "<FamilySummary " + to_string(s.family) + " pass=" + std::to_string(s.pass) +
               " skip=" + std::to_string(s.skipped) + " fail=" + std::to_string(s.failed) + ">";
      });

  m.def("required_precision", &required_precision, py::arg("family"), py::arg("t_max"));
  m.def(
      "verify_family",
      [](Catalog& catalog, const FamilyId& family, Exp t_max, Exp precision, int threads) {
        py::gil_scoped_release release;
        return verify_family(catalog, family, t_max, precision, threads);
      },
      py::arg("catalog"), py::arg("family"), py::arg("t_max"), py::arg("precision") = -1,
      py::arg("threads") = 1);

  py::class_<DensityStats>(m, "DensityStats")
      .def_readonly("odd", &DensityStats::odd)
      .def_readonly("total", &DensityStats::total)
      .def_readonly("ratio", &DensityStats::ratio)
      .def("__repr__", [](const DensityStats& d) {
        return "<DensityStats " + std::to_string(d.odd) + "/" + std::to_string(d.total) + ">";
      });

  m.def("density_stats", &density_stats, py::arg("catalog"), py::arg("id"), py::arg("modulus"),
        py::arg("residue"), py::arg("n_max"), py::arg("precision") = -1,
        py::call_guard<py::gil_scoped_release>());

  // ----- suites ---------------------------------------------------------------

  py::class_<SuiteOptions>(m, "SuiteOptions")
      .def(py::init<>())
      .def_readwrite("n_max", &SuiteOptions::n_max)
      .def_readwrite("t_max", &SuiteOptions::t_max)
      .def_readwrite("cor_t_max", &SuiteOptions::cor_t_max)
      .def_readwrite("threads", &SuiteOptions::threads);

  py::class_<StageResult>(m, "StageResult")
      .def_readonly("name", &StageResult::name)
      .def_readonly("ok", &StageResult::ok)
      .def_readonly("failures", &StageResult::failures)
      .def_property_readonly("details",
                             [](const StageResult& s) { return json_to_py(s.details); })
      .def("__repr__", [](const StageResult& s) {
        return "<StageResult " + s.name + " ok=" + (s.ok ? "True" : "False") + ">";
      });

  py::class_<SuiteReport>(m, "SuiteReport")
      .def_readonly("stages", &SuiteReport::stages)
      .def_property_readonly("ok", &SuiteReport::ok)
      .def("failures", &SuiteReport::failures)
      .def("as_dict", [](const SuiteReport& r) { return json_to_py(to_json(r)); })
      .def("__repr__", [](const SuiteReport& r) {
        return std::string("<SuiteReport ok=") + (r.ok() ? "True" : "False") + ">";
      });

  m.def("suite_read_ids", &suite_read_ids);
  m.def("inverse_delta_reference", &inverse_delta_reference, py::arg("precision"),
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "run_verify_all",
      [](Catalog& catalog, const SuiteOptions& options) {
        py::gil_scoped_release release;
        return run_verify_all(catalog, options);
      },
      py::arg("catalog"), py::arg("options") = SuiteOptions{});
  m.def(
      "table5",
      [](Catalog& catalog, Exp t_max, int threads) {
        ordered_json payload;
        {
          py::gil_scoped_release release;
          payload = table5_payload(catalog, t_max, threads);
        }
        return json_to_py(payload);
      },
      py::arg("catalog"), py::arg("t_max") = 50, py::arg("threads") = 1);
}
