#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gallagher/approx.hpp"
#include "gallagher/density.hpp"
#include "gallagher/ergodic.hpp"
#include "gallagher/experiments.hpp"
#include "gallagher/io.hpp"

namespace py = pybind11;
using namespace gallagher;

namespace pybind11::detail {

// Rationals cross the boundary as fractions.Fraction; int and "p/q" str are
// also accepted. Floats are rejected so no value is silently rounded.
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    const auto fraction = py::module_::import("fractions").attr("Fraction");
    if (!py::isinstance<py::int_>(src) && !py::isinstance<py::str>(src) && !py::isinstance(src, fraction)) return false;
    if (PyBool_Check(src.ptr())) return false;
    try {
      value = parse_rational(py::str(src).cast<std::string>());
    } catch (const std::invalid_argument&) {
      return false;
    }
    return true;
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    const auto fraction = py::module_::import("fractions").attr("Fraction");
    const py::int_ num(py::str(r.get_num().get_str()));
    const py::int_ den(py::str(r.get_den().get_str()));
    return fraction(num, den).release();
  }
};

template <>
struct type_caster<Integer> {
  PYBIND11_TYPE_CASTER(Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !py::isinstance<py::int_>(src) || PyBool_Check(src.ptr())) return false;
    value = Integer(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const Integer& z, return_value_policy, handle) {
    return py::int_(py::str(z.get_str())).release();
  }
};

template <>
struct type_caster<CirclePoint> {
  PYBIND11_TYPE_CASTER(CirclePoint, const_name("fractions.Fraction"));

  bool load(handle src, bool convert) {
    make_caster<Rational> inner;
    if (!inner.load(src, convert)) return false;
    value = CirclePoint::normalize(cast_op<Rational&>(inner));
    return true;
  }

  static handle cast(const CirclePoint& x, return_value_policy policy, handle parent) {
    return make_caster<Rational>::cast(x.value(), policy, parent);
  }
};

}  // namespace pybind11::detail

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_python(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::object report(const ExperimentReport& r) { return to_python(to_json(r)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact measure computations on the circle R/Z";

  m.def("norm", [](const CirclePoint& x) { return x.norm(); }, py::arg("x"));
  m.def("add_order_of", [](const CirclePoint& x) { return x.add_order(); }, py::arg("x"));
  m.def("dist_to_order_n", &dist_to_order_n, py::arg("x"), py::arg("n"));
  m.def("to_decimal", &to_decimal, py::arg("value"), py::arg("digits") = 12);

  m.def("is_prime", &is_prime);
  m.def("totient", &totient);
  m.def("radical", &radical);

  py::class_<ArcSet>(m, "ArcSet")
      .def(py::init<>())
      .def_static("full", &ArcSet::full)
      .def_static("arc", &ArcSet::from_arc, py::arg("start"), py::arg("length"))
      .def_static(
          "from_arcs",
          [](const std::vector<std::pair<CirclePoint, Rational>>& arcs) {
            std::vector<Arc> list;
            for (const auto& [start, length] : arcs) list.push_back({start, length});
            return ArcSet::from_arcs(list);
          },
          py::arg("arcs"))
      .def_static("from_json", [](const py::object& o) { return arcset_from_json(from_python(o)); })
      .def("to_json", [](const ArcSet& s) { return to_python(to_json(s)); })
      .def("arcs",
           [](const ArcSet& s) {
             std::vector<std::pair<Rational, Rational>> out;
             for (const auto& a : s.arcs()) out.emplace_back(a.start.value(), a.length);
             return out;
           })
      .def("measure", &ArcSet::measure)
      .def("is_empty", &ArcSet::empty)
      .def("is_full", &ArcSet::is_full)
      .def("contains", &ArcSet::contains, py::arg("x"))
      .def("__contains__", &ArcSet::contains)
      .def("subset_of", &ArcSet::subset_of)
      .def("translate", [](const ArcSet& s, const CirclePoint& a) { return translate(a, s); })
      .def("scale_image", [](const ArcSet& s, const Integer& k) { return scale_image(k, s); })
      .def("__or__", &set_union)
      .def("__and__", &intersection)
      .def("__sub__", &difference)
      .def("__invert__", &complement)
      .def("__eq__", [](const ArcSet& a, const ArcSet& b) { return a == b; })
      .def("__repr__", [](const ArcSet& s) { return "ArcSet(" + to_json(s).dump() + ")"; });

  py::class_<DeltaSequence>(m, "DeltaSequence")
      .def(py::init([](const std::string& text) { return parse_delta(text); }), py::arg("text"))
      .def_static("power", &DeltaSequence::power, py::arg("c"), py::arg("a"))
      .def_static("constant", &DeltaSequence::constant, py::arg("c"))
      .def_static("table", &DeltaSequence::table, py::arg("values"))
      .def("at", &DeltaSequence::at, py::arg("n"))
      .def("__call__", &DeltaSequence::at)
      .def("scaled", &DeltaSequence::scaled, py::arg("factor"))
      .def("to_json", [](const DeltaSequence& d) { return to_python(to_json(d)); })
      .def("__repr__", &DeltaSequence::describe);
  py::implicitly_convertible<py::str, DeltaSequence>();

  py::class_<IndexPredicate>(m, "IndexPredicate")
      .def(py::init([](const std::string& text) { return IndexPredicate::parse(text); }), py::arg("text") = "all")
      .def_static("not_div", &IndexPredicate::not_div)
      .def_static("exactly_once", &IndexPredicate::exactly_once)
      .def_static("div_by_square", &IndexPredicate::div_by_square)
      .def("__or__", &IndexPredicate::any_of)
      .def("__and__", &IndexPredicate::both)
      .def("__call__", &IndexPredicate::operator())
      .def("__repr__", &IndexPredicate::to_string);
  py::implicitly_convertible<py::str, IndexPredicate>();

  m.def("approx_order_set", &approx_order_set, py::arg("n"), py::arg("delta"));
  m.def(
      "tail_union",
      [](const DeltaSequence& delta, std::uint64_t n_min, std::uint64_t n_max, const IndexPredicate& pred) {
        return tail_union({n_min, n_max, pred, delta});
      },
      py::arg("delta"), py::arg("n_min"), py::arg("n_max"), py::arg("pred") = IndexPredicate::all());
  m.def(
      "subadditive_bound",
      [](const DeltaSequence& delta, std::uint64_t n_min, std::uint64_t n_max, const IndexPredicate& pred) {
        return subadditive_bound({n_min, n_max, pred, delta});
      },
      py::arg("delta"), py::arg("n_min"), py::arg("n_max"), py::arg("pred") = IndexPredicate::all());
  m.def(
      "gallagher_decomposition",
      [](std::uint64_t p, std::uint64_t n_min, std::uint64_t n_max, const DeltaSequence& delta) {
        auto d = gallagher_decomposition(p, n_min, n_max, delta);
        py::dict out;
        out["coprime"] = d.coprime;
        out["exactly_once"] = d.exactly_once;
        out["square"] = d.square;
        out["whole"] = d.whole;
        return out;
      },
      py::arg("p"), py::arg("n_min"), py::arg("n_max"), py::arg("delta"));

  m.def(
      "preimage", [](std::uint64_t n, const CirclePoint& x, const ArcSet& s) { return preimage({n, x}, s); },
      py::arg("n"), py::arg("x"), py::arg("s"));
  m.def(
      "invariant_set_search",
      [](std::uint64_t n, const CirclePoint& x, std::uint32_t k, unsigned workers) {
        py::gil_scoped_release release;
        return invariant_set_search({n, x}, k, workers);
      },
      py::arg("n"), py::arg("x"), py::arg("k"), py::arg("workers") = 0);

  m.def(
      "ball", [](const CirclePoint& x, const Rational& eps) { return ball({x, eps}); }, py::arg("x"), py::arg("eps"));
  m.def("ball_measure", &ball_measure, py::arg("eps"));
  m.def("density_ratio", &density_ratio, py::arg("s"), py::arg("x"), py::arg("eps"));
  m.def(
      "density_profile",
      [](const ArcSet& s, const CirclePoint& x, const std::vector<Rational>& schedule) {
        return density_profile(s, x, schedule);
      },
      py::arg("s"), py::arg("x"), py::arg("schedule"));

  m.def(
      "gallagher",
      [](const DeltaSequence& delta, const std::vector<std::uint64_t>& schedule, std::uint64_t n_max) {
        return report(gallagher_experiment(delta, schedule, n_max));
      },
      py::arg("delta"), py::arg("schedule"), py::arg("n_max"));
  m.def(
      "cassels",
      [](const DeltaSequence& delta, const Rational& scale, std::uint64_t n_min, std::uint64_t n_max,
         const IndexPredicate& pred) { return report(cassels_experiment(delta, scale, pred, n_min, n_max)); },
      py::arg("delta"), py::arg("m"), py::arg("n_min"), py::arg("n_max"), py::arg("pred") = IndexPredicate::all());
  m.def(
      "duffin_schaeffer",
      [](const DeltaSequence& delta, std::uint64_t cap) { return report(duffin_schaeffer_classify(delta, cap)); },
      py::arg("delta"), py::arg("cap") = 1024);
  m.def("membership_witnesses", &membership_witnesses, py::arg("x"), py::arg("delta"), py::arg("n_max"));
  m.def(
      "witnesses",
      [](const CirclePoint& x, const DeltaSequence& delta, std::uint64_t n_max) {
        return report(witness_report(x, delta, n_max));
      },
      py::arg("x"), py::arg("delta"), py::arg("n_max"));
}
