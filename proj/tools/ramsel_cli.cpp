// Command-line front end: every engine reachable from files and inline JSON
// literals. Exit codes: 0 success, 2 when the run ends in Neither or finds
// no witness, 3 on any error.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsel/ramsel.hpp"

namespace {

using json = nlohmann::json;
using namespace ramsel;

struct Options {
  bool asJson = false;
  bool trace = false;
};

int emit_report(const SelectorReport& r, const Options& opt,
                json certificates = json::object()) {
  if (opt.asJson) {
    std::cout << io::report_to_json(r, std::move(certificates)).dump(2)
              << "\n";
  } else {
    std::cout << "output: " << r.output.str() << "\n";
    std::cout << "verdict: " << to_string(r.verdict) << "\n";
    if (opt.trace)
      for (const auto& e : r.trace) std::cout << io::trace_line(e) << "\n";
    if (!certificates.empty())
      std::cout << "certificates: " << certificates.dump() << "\n";
  }
  return 0;
}

int emit_set(const FinSet& s, const Options& opt,
             json certificates = json::object()) {
  if (opt.asJson) {
    json out{{"output", io::set_to_json(s)},
             {"verdict", nullptr},
             {"trace", json::array()},
             {"certificates", std::move(certificates)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "output: " << s.str() << "\n";
    if (!certificates.empty())
      std::cout << "certificates: " << certificates.dump() << "\n";
  }
  return 0;
}

int run_ramsey(nat n, const std::string& coloring, const std::string& stream,
               nat horizon, const Options& opt) {
  auto family = io::family_from_spec(coloring);
  SelectorReport r = ramsey_select(n, family, io::stream_from_spec(stream),
                                   horizon);
  ColorFamily C{tuple_front(n, io::stream_from_spec(stream)), family};
  json cert{{"size", r.output.size()},
            {"classified", to_string(classify_hom_set(C, r.output).verdict())}};
  return emit_report(r, opt, std::move(cert));
}

int run_nw(const std::string& front, const std::string& family,
           const std::string& stream, nat horizon, const Options& opt) {
  NatStream base = io::stream_from_spec(stream);
  ColorFamily C{io::front_from_spec(front, base, horizon),
                io::family_from_spec(family)};
  SelectorReport r = nw_select(C, base, horizon);
  json cert{{"size", r.output.size()},
            {"classified", to_string(classify_hom_set(C, r.output).verdict())}};
  return emit_report(r, opt, std::move(cert));
}

int run_check_hom(const std::string& front, const std::string& family,
                  const std::string& csv, const Options& opt) {
  FinSet s = io::set_from_csv(csv);
  nat horizon = s.empty() ? 1 : s.max() + 1;
  NatStream base = NatStream::naturals();
  ColorFamily C{io::front_from_spec(front, base, horizon),
                io::family_from_spec(family)};
  HomVerdict v = classify_hom_set(C, s).verdict();
  if (opt.asJson) {
    json out{{"output", io::set_to_json(s)},
             {"verdict", to_string(v)},
             {"trace", json::array()},
             {"certificates", json::object()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "set: " << s.str() << "\n";
    std::cout << "verdict: " << to_string(v) << "\n";
  }
  return v == HomVerdict::Neither ? 2 : 0;
}

int run_galvin(const std::string& family, const std::string& stream, nat k,
               nat horizon, const Options& opt) {
  auto fam = io::family_from_spec(family);
  auto w = galvin_search(fam, io::stream_from_spec(stream), horizon, k);
  if (opt.asJson) {
    json out{{"output", w ? io::set_to_json(*w) : json(nullptr)},
             {"verdict", w ? "Witness" : "NoWitness"},
             {"trace", json::array()},
             {"certificates", json::object()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (w ? "witness: " + w->str() : std::string("no witness"))
              << "\n";
  }
  return w ? 0 : 2;
}

json points_certificate(const OrderedEnumeration& E, const FinSet& idx) {
  json pts = json::array();
  for (nat i : idx) pts.push_back(E.point(i).get_str());
  return pts;
}

int run_gallery(const std::string& which, nat horizon, const Options& opt) {
  if (which == "cy") {
    NatStream y = NatStream::powers(2);
    SelectorReport r =
        ramsey_select(2, cy_family(NatStream::powers(2)),
                      NatStream::naturals(), horizon);
    bool zeroHom = r.verdict == HomVerdict::Hom0;
    json cert{{"zero-homogeneous", zeroHom}};
    if (zeroHom) cert["cy-member"] = cy_member(std::move(y), r.output);
    return emit_report(r, opt, std::move(cert));
  }
  if (which == "woq") {
    OrderedEnumeration E = rationals_unit();
    SelectorReport r = ramsey_select(2, sierpinski_family(E),
                                     NatStream::naturals(), horizon);
    json cert{{"monotone", r.verdict == HomVerdict::Hom1 ? "increasing"
                                                         : "decreasing"},
              {"points", points_certificate(E, r.output)}};
    return emit_report(r, opt, std::move(cert));
  }
  if (which == "converge") {
    OrderedEnumeration E = alternating_approach();
    SelectorReport r = convergent_select(E, horizon);
    json cert{{"points", points_certificate(E, r.output)}};
    if (r.output.size() >= 2) {
      mpq_class tv = 0, maxGap = 0, prev = E.point(r.output[0]);
      for (std::size_t i = 1; i < r.output.size(); ++i) {
        mpq_class cur = E.point(r.output[i]);
        mpq_class gap = abs(cur - prev);
        tv += gap;
        if (gap > maxGap) maxGap = gap;
        prev = cur;
      }
      cert["total-variation"] = tv.get_str();
      cert["max-late-gap"] = maxGap.get_str();
    }
    return emit_report(r, opt, std::move(cert));
  }
  if (which == "nwd") {
    OrderedEnumeration E = stern_brocot_unit();
    SelectorReport r = nwd_select(E, NatStream::naturals(), horizon);
    json cert{{"monotone", r.verdict == HomVerdict::Hom1 ? "increasing"
                                                         : "decreasing"},
              {"points", points_certificate(E, r.output)}};
    return emit_report(r, opt, std::move(cert));
  }
  throw std::invalid_argument("unknown gallery instance: " + which);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homogeneous-set and set-code workbench"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.asJson, "emit one JSON object");

  nat n = 2, horizon = 12, count = 5, levels = 2, kSize = 2, mBits = 4;
  std::string coloring, stream = "naturals", frontSpec, familySpec, seqSpec,
              partSpec, phiName = "counting", treeFile, funcFile, xBits,
              setCsv, galleryName;

  auto* ramsey = app.add_subcommand("ramsey", "monochromatic-set search");
  ramsey->add_option("--n", n, "tuple size")->required();
  ramsey->add_option("--coloring", coloring, "family spec")->required();
  ramsey->add_option("--stream", stream, "ground stream spec");
  ramsey->add_option("--horizon", horizon, "prefix bound")->required();
  ramsey->add_flag("--trace", opt.trace, "print trace lines");

  auto* nw = app.add_subcommand("nw", "front-driven homogeneous-set search");
  nw->add_option("--front", frontSpec, "front spec")->required();
  nw->add_option("--family", familySpec, "family spec")->required();
  nw->add_option("--stream", stream, "ground stream spec");
  nw->add_option("--horizon", horizon, "prefix bound")->required();
  nw->add_flag("--trace", opt.trace, "print trace lines");

  auto* diag = app.add_subcommand("diagonalize", "chain through a sequence");
  diag->add_option("--seq", seqSpec, "sequence spec")->required();
  diag->add_option("--count", count, "output size")->required();

  auto* up = app.add_subcommand("uniform-p", "layered least-mass union");
  up->add_option("--phi", phiName, "submeasure name")->required();
  up->add_option("--seq", seqSpec, "sequence spec")->required();
  up->add_option("--levels", levels, "levels")->required();
  up->add_option("--horizon", horizon, "prefix bound")->required();

  auto* uq = app.add_subcommand("uniform-q", "least-mass selector chain");
  uq->add_option("--phi", phiName, "submeasure name")->required();
  uq->add_option("--stream", stream, "ground stream spec");
  uq->add_option("--partition", partSpec, "partition spec")->required();
  uq->add_option("--levels", levels, "levels")->required();
  uq->add_option("--horizon", horizon, "prefix bound")->required();

  auto* borel = app.add_subcommand("borel", "labeled-tree set codes");
  borel->require_subcommand(1);
  auto* beval = borel->add_subcommand("eval", "membership of a point");
  beval->add_option("--tree", treeFile, "tree file")->required();
  beval->add_option("--x", xBits, "point prefix bits")->required();
  auto* bcomp = borel->add_subcommand("complement", "complement a code");
  bcomp->add_option("--tree", treeFile, "tree file")->required();
  auto* bomega = borel->add_subcommand("omega", "coded-function value");
  bomega->add_option("--func", funcFile, "function-code file")->required();
  bomega->add_option("--x", xBits, "point prefix bits")->required();
  bomega->add_option("--m", mBits, "output bits")->required();

  auto* gal = app.add_subcommand("galvin-search", "exhaustive witness search");
  gal->add_option("--family", familySpec, "family spec")->required();
  gal->add_option("--stream", stream, "ground stream spec");
  gal->add_option("--k", kSize, "witness size")->required();
  gal->add_option("--horizon", horizon, "prefix bound")->required();

  auto* gallery = app.add_subcommand("gallery", "registered instances");
  gallery->add_option("name", galleryName, "cy|woq|converge|nwd")->required();
  gallery->add_option("--horizon", horizon, "prefix bound")->required();

  auto* check = app.add_subcommand("check-hom", "classify one finite set");
  check->add_option("--front", frontSpec, "front spec")->required();
  check->add_option("--family", familySpec, "family spec")->required();
  check->add_option("--set", setCsv, "comma-separated elements")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ramsey) return run_ramsey(n, coloring, stream, horizon, opt);
    if (*nw) return run_nw(frontSpec, familySpec, stream, horizon, opt);
    if (*diag)
      return emit_set(diagonalize(io::seq_from_spec(seqSpec), count), opt);
    if (*up) {
      Submeasure phi = submeasure_by_name(phiName);
      FinSet out =
          uniform_p(phi, io::seq_from_spec(seqSpec), levels, horizon);
      json cert{{"phi", phi.eval(out).str()}, {"levels", levels}};
      return emit_set(out, opt, std::move(cert));
    }
    if (*uq) {
      Submeasure phi = submeasure_by_name(phiName);
      FinSet out = uniform_q(phi, io::stream_from_spec(stream),
                             io::partition_from_spec(partSpec), levels,
                             horizon);
      json cert{{"phi", phi.eval(out).str()}, {"levels", levels}};
      return emit_set(out, opt, std::move(cert));
    }
    if (*beval) {
      bool in = tree_member(io::bits_from_string(xBits),
                            io::tree_from_file(treeFile));
      if (opt.asJson) {
        json out{{"output", in},
                 {"verdict", nullptr},
                 {"trace", json::array()},
                 {"certificates", json::object()}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "member: " << (in ? "true" : "false") << "\n";
      }
      return 0;
    }
    if (*bcomp) {
      LabeledTree G = complement_tree(io::tree_from_file(treeFile));
      std::cout << io::tree_to_json(G).dump() << "\n";
      return 0;
    }
    if (*bomega) {
      std::vector<bool> w = omega_eval(io::bits_from_string(xBits),
                                       io::func_from_file(funcFile), mBits);
      if (opt.asJson) {
        json out{{"output", io::bits_to_string(w)},
                 {"verdict", nullptr},
                 {"trace", json::array()},
                 {"certificates", json::object()}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "value: " << io::bits_to_string(w) << "\n";
      }
      return 0;
    }
    if (*gal) return run_galvin(familySpec, stream, kSize, horizon, opt);
    if (*gallery) return run_gallery(galleryName, horizon, opt);
    if (*check) return run_check_hom(frontSpec, familySpec, setCsv, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
