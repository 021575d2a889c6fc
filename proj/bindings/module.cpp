// Python bindings for the union-closed set system laboratory. Members and
// families cross the boundary as lists of label lists; everything heavier
// stays on the C++ side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ucs/decisive_weight.hpp"
#include "ucs/dichotomy.hpp"
#include "ucs/fixtures.hpp"
#include "ucs/io.hpp"

namespace py = pybind11;
using namespace ucs;

namespace {

using Labels = std::vector<std::string>;
using LabelSets = std::vector<Labels>;

MemberSet to_member(const GroundSet& g, const Labels& labels) { return g.member_of(labels); }

std::vector<MemberSet> to_members(const GroundSet& g, const LabelSets& sets) {
  std::vector<MemberSet> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(to_member(g, s));
  return out;
}

Labels from_member(const GroundSet& g, const MemberSet& m) { return g.labels_of(m); }

LabelSets from_members(const SetSystem& s) {
  LabelSets out;
  out.reserve(s.size());
  for (const auto& m : s.members()) out.push_back(s.ground().labels_of(m));
  return out;
}

py::object v_to_py(const VValue& v) {
  if (!v.finite) return py::cast(std::string("infinite"));
  if (v.value.is_integer()) return py::cast(v.value.num());
  return py::cast(v.value.str());
}

}  // namespace

PYBIND11_MODULE(ucslab, m) {
  m.doc() = "exact laboratory for finite union-closed set systems";

  py::class_<GroundSet>(m, "GroundSet")
      .def(py::init<std::vector<std::string>>(), py::arg("labels"))
      .def_property_readonly("labels", &GroundSet::labels)
      .def("__len__", &GroundSet::size)
      .def("__repr__", [](const GroundSet& g) {
        return "GroundSet(" + std::to_string(g.size()) + " points)";
      });

  py::class_<SetSystem>(m, "SetSystem")
      .def(py::init([](const GroundSet& g, const LabelSets& members, bool closed) {
             return SetSystem(g, to_members(g, members), closed);
           }),
           py::arg("ground"), py::arg("members"), py::arg("closed") = false)
      .def_property_readonly("ground", &SetSystem::ground)
      .def_property_readonly("members", &from_members)
      .def_property_readonly("closed_flag", &SetSystem::closed_flag)
      .def("__len__", &SetSystem::size)
      .def("contains",
           [](const SetSystem& s, const Labels& member) {
             return s.contains(to_member(s.ground(), member));
           })
      .def("__repr__", [](const SetSystem& s) {
        return "SetSystem(" + std::to_string(s.size()) + " members over " +
               std::to_string(s.ground().size()) + " points)";
      });

  py::class_<Spread>(m, "Spread")
      .def(py::init([](const GroundSet& g, const LabelSets& blocks, bool allow_irregular) {
             return Spread(g, to_members(g, blocks), allow_irregular);
           }),
           py::arg("ground"), py::arg("blocks"), py::arg("allow_irregular") = false)
      .def_property_readonly("blocks",
                             [](const Spread& sp) {
                               LabelSets out;
                               for (const auto& b : sp.blocks())
                                 out.push_back(sp.ground().labels_of(b));
                               return out;
                             })
      .def_property_readonly("levels", &Spread::levels);

  py::class_<Colouring>(m, "Colouring")
      .def(py::init([](const GroundSet& g, const LabelSets& classes) {
             return Colouring(g, to_members(g, classes));
           }),
           py::arg("ground"), py::arg("classes"))
      .def_static("trivial", &Colouring::trivial)
      .def_property_readonly("classes", [](const Colouring& c) {
        LabelSets out;
        for (const auto& cl : c.classes()) out.push_back(c.ground().labels_of(cl));
        return out;
      });

  py::class_<LogWeight>(m, "LogWeight")
      .def("value",
           [](const LogWeight& w, const Labels& member) {
             const Rational& v = w.value_of(to_member(w.system().ground(), member));
             return v.is_integer() ? py::cast(v.num()) : py::cast(v.str());
           })
      .def_property_readonly("system", &LogWeight::system);

  m.def(
      "union_closure",
      [](const GroundSet& g, const LabelSets& generators, std::uint64_t member_cap) {
        return union_closure(to_members(g, generators), g, {member_cap});
      },
      py::arg("ground"), py::arg("generators"),
      py::arg("member_cap") = ClosureLimits{}.member_cap);

  m.def("is_union_closed", [](const SetSystem& s) { return is_union_closed(s).closed; });

  m.def("power_set_system", [](const GroundSet& g) { return power_set_system(g); });
  m.def("nonempty_power_set_system",
        [](const GroundSet& g) { return nonempty_power_set_system(g); });

  m.def(
      "filter_generated",
      [](const SetSystem& s, const LabelSets& e) {
        return filter_generated(to_members(s.ground(), e), s);
      },
      py::arg("system"), py::arg("generators"));

  m.def(
      "is_incompressible",
      [](const GroundSet& g, const LabelSets& family) {
        return is_incompressible(to_members(g, family)).incompressible;
      },
      py::arg("ground"), py::arg("family"));

  m.def(
      "breadth",
      [](const SetSystem& s, std::uint64_t node_budget) {
        BreadthResult r = breadth(s, {node_budget});
        py::dict out;
        out["value"] = r.value;
        out["exact"] = r.exact;
        LabelSets witness;
        for (std::size_t i : r.witness) witness.push_back(from_member(s.ground(), s.member(i)));
        out["witness"] = witness;
        return out;
      },
      py::arg("system"), py::arg("node_budget") = BreadthLimits{}.node_budget);

  m.def("make_spread", [](const std::vector<std::size_t>& sizes, const GroundSet& g) {
    return make_spread(sizes, g);
  });
  m.def("default_spread", &default_spread, py::arg("levels"));

  m.def("tmax", &tmax);
  m.def("tmin", &tmin);
  m.def("tort", &tort);

  m.def("weight_tmax_on", &weight_tmax_on, py::arg("spread"), py::arg("host"));
  m.def("weight_tmin_on", &weight_tmin_on, py::arg("spread"), py::arg("host"));
  m.def("weight_from_colouring", &weight_from_colouring, py::arg("system"), py::arg("spread"),
        py::arg("colouring"), py::arg("class_index") = 0);

  m.def("check_log_weight", [](const LogWeight& w) { return check_log_weight(w).ok; });

  m.def(
      "v_value",
      [](const LogWeight& w, const LabelSets& e, const Labels& z) {
        const GroundSet& g = w.system().ground();
        return v_to_py(v_value(to_members(g, e), to_member(g, z), w));
      },
      py::arg("weight"), py::arg("e"), py::arg("z"));

  m.def(
      "propagation_constant",
      [](const LogWeight& w, std::int64_t level, std::size_t max_subset_size,
         std::uint64_t max_subsets) {
        PropagationReport r =
            propagation_constant(w, Rational(level), {max_subset_size, max_subsets});
        py::dict out;
        out["max_v"] = v_to_py(r.max_v);
        out["exhaustive"] = r.exhaustive;
        out["pairs_examined"] = r.pairs_examined;
        return out;
      },
      py::arg("weight"), py::arg("level"), py::arg("max_subset_size") = 4,
      py::arg("max_subsets") = PropagationLimits{}.max_subsets);

  m.def(
      "dichotomy_search",
      [](const SetSystem& s, const Spread& spread, std::size_t depth, std::size_t threshold,
         std::int64_t bound) {
        DichotomyParams params{depth, threshold, bound};
        DichotomyResult r = dichotomy_search(s, spread, params);
        py::dict out;
        out["kind"] = r.kind == DichotomyResult::Kind::shatter    ? "shatter"
                      : r.kind == DichotomyResult::Kind::decisive ? "decisive"
                                                                  : "inconclusive";
        out["record"] = io::dichotomy_record(r, s, spread);
        if (r.decisive) out["decisive_class"] = r.decisive->class_index;
        if (r.shatter) {
          LabelSets members;
          for (std::size_t i : r.shatter->members)
            members.push_back(from_member(s.ground(), s.member(i)));
          out["shatter_members"] = members;
        }
        return out;
      },
      py::arg("system"), py::arg("spread"), py::arg("depth") = 1, py::arg("threshold") = 1,
      py::arg("bound") = 0);

  m.def(
      "gamma_atoms",
      [](const GroundSet& g, const LabelSets& sets) {
        return gamma_atoms(to_members(g, sets), g);
      },
      py::arg("ground"), py::arg("sets"));

  m.def(
      "colours_spread",
      [](const Colouring& c, const Spread& sp, std::size_t first, std::size_t last,
         std::size_t threshold) {
        Window w{first == 0 ? 1 : first, last == 0 ? sp.levels() : last, threshold};
        return colours_spread(c, sp, w).ok;
      },
      py::arg("colouring"), py::arg("spread"), py::arg("first") = 0, py::arg("last") = 0,
      py::arg("threshold") = 1);

  m.def(
      "shatters",
      [](const GroundSet& g, const LabelSets& sequence, const Spread& sp, std::size_t depth,
         std::size_t threshold) {
        return shatters(to_members(g, sequence), sp, depth, Window::full(sp, threshold)).ok;
      },
      py::arg("ground"), py::arg("sequence"), py::arg("spread"), py::arg("depth"),
      py::arg("threshold") = 1);

  m.def(
      "halves",
      [](const GroundSet& g, const Labels& f, const Labels& d, const Spread& sp,
         std::size_t threshold) {
        return halves(to_member(g, f), to_member(g, d), sp, Window::full(sp, threshold));
      },
      py::arg("ground"), py::arg("f"), py::arg("d"), py::arg("spread"),
      py::arg("threshold") = 1);

  m.def(
      "find_halver",
      [](const SetSystem& s, const Colouring& c, const Spread& sp,
         std::size_t threshold) -> py::object {
        auto w = find_halver(s, c, sp, Window::full(sp, threshold));
        if (!w) return py::none();
        py::dict out;
        out["member"] = from_member(s.ground(), s.member(w->member));
        out["surviving_blocks"] = w->surviving;
        return out;
      },
      py::arg("system"), py::arg("colouring"), py::arg("spread"), py::arg("threshold") = 1);

  m.def(
      "decisive_statistic",
      [](const SetSystem& s, const Spread& sp, const Colouring& c, std::size_t class_index) {
        DecisiveReport r = decisive_statistic(s, sp, c, class_index, Window::full(sp));
        py::dict out;
        out["max_statistic"] = r.max_statistic;
        out["statistics"] = r.statistic;
        return out;
      },
      py::arg("system"), py::arg("spread"), py::arg("colouring"), py::arg("class_index") = 0);

  m.def(
      "t_set",
      [](const GroundSet& g, const Labels& x, const Spread& sp, const Colouring& c) {
        return t_set(to_member(g, x), sp, c).blocks;
      },
      py::arg("ground"), py::arg("x"), py::arg("spread"), py::arg("colouring"));

  m.def(
      "verify_tort_failure",
      [](std::size_t levels, const Colouring& colouring, std::size_t class_index) {
        auto rows = verify_tort_failure(levels, colouring, class_index);
        py::list out;
        for (const auto& r : rows) {
          py::dict row;
          row["n"] = r.n;
          row["v"] = v_to_py(r.v);
          row["bound"] = r.bound.str();
          row["pass"] = r.pass;
          out.append(row);
        }
        return out;
      },
      py::arg("levels"), py::arg("colouring"), py::arg("class_index") = 0);

  m.def(
      "refined_structure",
      [](const SetSystem& s, const LabelSets& chain, const std::vector<std::size_t>& schedule) {
        RefinedStructure r = refined_structure(s, to_members(s.ground(), chain), schedule);
        py::dict out;
        LabelSets blocks;
        for (const auto& b : r.spread.blocks()) blocks.push_back(from_member(s.ground(), b));
        out["blocks"] = blocks;
        out["schedule"] = r.schedule;
        out["block_sizes"] = r.block_sizes;
        return out;
      },
      py::arg("system"), py::arg("chain"), py::arg("schedule") = std::vector<std::size_t>{});

  m.def(
      "verify_level_one_failure",
      [](const std::string& kind, std::size_t levels) {
        auto rows = verify_level_one_failure(
            kind == "tmin" ? CanonicalKind::tmin : CanonicalKind::tmax, levels);
        py::list out;
        for (const auto& r : rows) {
          py::dict row;
          row["n"] = r.n;
          row["block_size"] = r.block_size;
          row["v"] = v_to_py(r.v);
          row["bound"] = r.bound.str();
          row["pass"] = r.pass;
          out.append(row);
        }
        return out;
      },
      py::arg("kind"), py::arg("levels"));

  m.def(
      "section6_check",
      [](std::size_t columns, std::size_t n) {
        Section6Bundle bundle = section6_build(columns);
        Section6BoundRow row = verify_section6_bounds(bundle, n);
        py::dict out;
        out["v"] = v_to_py(row.v);
        out["bound"] = row.bound.str();
        out["pass"] = row.pass;
        return out;
      },
      py::arg("columns") = 8, py::arg("n") = 2);
}
