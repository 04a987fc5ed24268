#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "doldkit/cli.hpp"
#include "doldkit/dynsys.hpp"
#include "doldkit/lefschetz.hpp"
#include "doldkit/repair.hpp"
#include "doldkit/series.hpp"

namespace py = pybind11;
using namespace doldkit;

namespace {

// Python ints travel as decimal strings; Rats as fractions.Fraction.
Int to_int(py::handle h) {
  if (py::hasattr(h, "denominator") && !py::isinstance<py::int_>(h)) {
    if (py::int_(h.attr("denominator")).cast<long long>() != 1) {
      throw py::value_error("expected an integer, got " + py::str(h).cast<std::string>());
    }
    return parse_int(py::str(h.attr("numerator")).cast<std::string>());
  }
  return parse_int(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>());
}

py::int_ from_int(const Int& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Rat to_rat(py::handle h) {
  if (py::hasattr(h, "denominator") && !py::isinstance<py::int_>(h)) {
    return ratio(to_int(h.attr("numerator")), to_int(h.attr("denominator")));
  }
  return Rat(to_int(h));
}

py::object from_rat(const Rat& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(from_int(q.get_num()), from_int(q.get_den()));
}

SeqPrefix seq_of(const py::sequence& s) {
  std::vector<Int> v;
  for (py::handle h : s) v.push_back(to_int(h));
  return SeqPrefix(std::move(v));
}

RatSeqPrefix rat_seq_of(const py::sequence& s) {
  std::vector<Rat> v;
  for (py::handle h : s) v.push_back(to_rat(h));
  return RatSeqPrefix(std::move(v));
}

template <class T>
py::list list_of(std::span<const T> values) {
  py::list out;
  for (const T& v : values) {
    if constexpr (std::is_same_v<T, Int>) out.append(from_int(v));
    else out.append(from_rat(v));
  }
  return out;
}

template <class T>
py::list list_of(const std::vector<T>& values) {
  return list_of(std::span<const T>(values));
}

IntMatrix matrix_of(const py::sequence& rows) {
  const std::size_t k = py::len(rows);
  std::vector<Int> entries;
  for (py::handle row : rows) {
    const py::sequence r = py::reinterpret_borrow<py::sequence>(row);
    if (py::len(r) != k) throw py::value_error("matrix must be square");
    for (py::handle x : r) entries.push_back(to_int(x));
  }
  return IntMatrix(k, std::move(entries));
}

struct PyVerdict {
  bool ok;
  std::size_t index;
  py::object witness;
};

PyVerdict verdict_of(const CongruenceVerdict& v) {
  return {v.ok(), v.index(), v.ok() ? py::object(py::none()) : from_rat(v.witness())};
}

Criterion criterion_of(const std::string& name, const std::optional<py::sequence>& psi) {
  if (name == "mobius" || name == "dold") return Criterion::mobius();
  if (name == "phi") return Criterion::phi();
  if (name == "prime-power" || name == "prime_power") return Criterion::prime_power();
  if (name == "psi") {
    if (!psi) throw py::value_error("criterion 'psi' needs psi weights");
    return Criterion::psi(seq_of(*psi));
  }
  throw py::value_error("unknown criterion: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tests and transforms for Dold and realizable integer sequences";
  py::register_exception<Error>(m, "DoldkitError", PyExc_ValueError);

  py::class_<PyVerdict>(m, "Verdict")
      .def_readonly("ok", &PyVerdict::ok)
      .def_readonly("index", &PyVerdict::index)
      .def_readonly("witness", &PyVerdict::witness)
      .def("__bool__", [](const PyVerdict& v) { return v.ok; })
      .def("__repr__", [](const PyVerdict& v) {
        if (v.ok) return "Holds(" + std::to_string(v.index) + ")";
        return "Fails(" + std::to_string(v.index) + ", " + py::str(v.witness).cast<std::string>() + ")";
      });

  m.def("mobius", [](std::uint64_t n) { return mobius(n); });
  m.def("euler_phi", [](std::uint64_t n) { return euler_phi(n); });
  m.def("factorize", [](std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (const PrimePower& pp : factorize(n)) out.emplace_back(pp.prime, pp.exponent);
    return out;
  });

  m.def("transform_B", [](const py::sequence& a) { return list_of(transform_B(rat_seq_of(a)).values()); });
  m.def("transform_C", [](const py::sequence& a) { return list_of(transform_C(rat_seq_of(a)).values()); });
  m.def("inverse_B", [](const py::sequence& b) { return list_of(inverse_B(rat_seq_of(b)).values()); });
  m.def("inverse_C", [](const py::sequence& c) { return list_of(inverse_C(rat_seq_of(c)).values()); });

  m.def(
      "congruence_test",
      [](const py::sequence& a, const std::string& criterion, std::optional<py::sequence> psi) {
        return verdict_of(congruence_test(seq_of(a), criterion_of(criterion, psi)));
      },
      py::arg("a"), py::arg("criterion") = "mobius", py::arg("psi") = py::none());
  m.def("is_realizable", [](const py::sequence& a) { return verdict_of(is_realizable(seq_of(a))); });
  m.def("periodic_expansion", [](const py::sequence& a, std::size_t bound) -> py::object {
    const auto r = periodic_expansion(seq_of(a), bound);
    const auto* comb = std::get_if<PeriodicCombination>(&r);
    if (comb == nullptr) return py::none();
    py::dict out;
    for (const auto& [d, c] : comb->coeffs()) out[py::int_(d)] = from_int(c);
    return out;
  });

  m.def("zeta_from_fix", [](const py::sequence& a) { return list_of(zeta_from_fix(seq_of(a)).coeffs()); });
  m.def("fix_from_zeta", [](const py::sequence& z) {
    std::vector<Rat> c;
    for (py::handle h : z) c.push_back(to_rat(h));
    return list_of(fix_from_zeta(PowerSeries(std::move(c))).values());
  });
  m.def("rational_fit", [](const py::sequence& z, std::size_t dmax) -> py::object {
    std::vector<Rat> c;
    for (py::handle h : z) c.push_back(to_rat(h));
    const auto fn = rational_fit(PowerSeries(std::move(c)), dmax);
    if (!fn) return py::none();
    return py::make_tuple(list_of(fn->numerator), list_of(fn->denominator));
  });

  m.def("hankel_dets", [](const py::sequence& w, std::size_t m_max) {
    std::vector<Rat> v;
    for (py::handle h : w) v.push_back(to_rat(h));
    return list_of(hankel_dets(HankelWindow(std::move(v)), m_max));
  });
  m.def("generating_hankel_test", [](const py::sequence& a, std::size_t bound, std::size_t width) {
    return verdict_of(generating_hankel_test(seq_of(a), bound, width));
  });

  m.def("trace_sequence", [](const py::sequence& A, std::size_t N) {
    return list_of(trace_sequence(matrix_of(A), N).values());
  });
  m.def("lefschetz_sequence", [](const py::sequence& A, const py::sequence& B, std::size_t N) {
    return list_of(lefschetz_sequence(matrix_of(A), matrix_of(B), N).values());
  });
  m.def("euler_fermat_check", [](const py::sequence& A, std::uint64_t p, unsigned r) {
    return euler_fermat_check(matrix_of(A), p, r);
  });

  m.def("realize", [](const std::map<std::uint64_t, std::uint64_t>& spec) {
    return realize(OrbitSpec(spec)).table();
  });
  m.def("count_fixed", [](const std::vector<std::size_t>& table, std::uint64_t n) {
    return count_fixed(FiniteMap(table), n);
  });

  m.def("failure_window", [](const std::string& gen, std::size_t N) {
    const auto src = SequenceSource::by_name(gen);
    if (!src) throw py::value_error("unknown generator: " + gen);
    const FailureResult f = failure_window(*src, N);
    return py::make_tuple(from_int(f.lcm_value), f.last_new_prime_at);
  });
  m.def("stirling1", [](std::uint64_t n, std::uint64_t k) { return from_int(stirling1(n, k)); });
  m.def("stirling2", [](std::uint64_t n, std::uint64_t k) { return from_int(stirling2(n, k)); });
  m.def("bernoulli_pair", [](std::uint64_t n) {
    const auto [t, b] = bernoulli_pair(n);
    return py::make_tuple(from_int(t), from_int(b));
  });
  m.def("euler_abs", [](std::uint64_t n) { return from_int(euler_abs(n)); });
  m.def("fibonacci", [](std::uint64_t n) { return from_int(fibonacci_number(n)); });
  m.def("sharkovskii_precedes", &sharkovskii_precedes);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}
