#include "tropfan/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>

#include "tropfan/convexity.hpp"
#include "tropfan/errors.hpp"
#include "tropfan/fan_ops.hpp"
#include "tropfan/io.hpp"
#include "tropfan/lorentzian.hpp"
#include "tropfan/matroid.hpp"

namespace tropfan {

namespace {

struct Options {
  std::string fan;
  std::string fan2;
  std::string divisors;
  std::string divisor;
  std::string matroid;
  std::string cone;
  std::string point;
  std::vector<std::string> polytopes;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 0;
  std::size_t jobs = 1;
  bool weak = false;
  bool skip_fan_condition = false;
};

RatVector parse_point(const std::string& text) {
  RatVector v;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    v.push_back(parse_rational(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return v;
}

Divisor load_divisor(const std::string& path) { return divisor_from_json(read_json_file(path)); }

int emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << j.dump(2) << "\n";
  } else {
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write '" + o.out + "'");
    f << j.dump(2) << "\n";
  }
  return kOk;
}

int run_command(const std::string& cmd, const Options& o, std::ostream& out) {
  if (cmd == "validate") {
    FanInput in = fan_from_json(read_json_file(o.fan));
    ValidationReport rep = validate(in.fan, !o.skip_fan_condition);
    emit(to_json(rep), o, out);
    return rep.ok() ? kOk : kInputError;
  }
  if (cmd == "balance") {
    FanInput in = fan_from_json(read_json_file(o.fan));
    if (!in.weight) throw InputError("fan has no weights");
    return emit(to_json(check_balancing(in.fan, *in.weight)), o, out);
  }
  if (cmd == "degree") {
    TropicalFan tf = tropical_from_json(read_json_file(o.fan));
    std::vector<Divisor> ds = divisors_from_json(read_json_file(o.divisors));
    if (ds.size() == 1 && tf.fan.dim() > 1) ds.assign(tf.fan.dim(), ds.front());
    return emit(Json{{"degree", rational_to_json(mixed_degree(tf, ds))}}, o, out);
  }
  if (cmd == "convexity") {
    FanInput in = fan_from_json(read_json_file(o.fan));
    return emit(to_json(classify_convexity(in.fan, load_divisor(o.divisor), !o.weak)), o, out);
  }
  if (cmd == "lorentzian") {
    TropicalFan tf = tropical_from_json(read_json_file(o.fan));
    if (o.samples > 0 && !o.seed) throw InputError("--samples needs an explicit --seed");
    Json j = to_json(is_lorentzian(tf, LorentzianOptions{o.jobs}));
    if (o.samples > 0) j["sample_check"] = to_json(definition_sample_check(tf, o.samples, *o.seed));
    return emit(j, o, out);
  }
  if (cmd == "af") {
    TropicalFan tf = tropical_from_json(read_json_file(o.fan));
    std::vector<Divisor> ds = divisors_from_json(read_json_file(o.divisors));
    if (ds.size() < 2) throw InputError("af needs D1, D2 and the auxiliary divisors");
    std::vector<Divisor> aux(ds.begin() + 2, ds.end());
    return emit(to_json(af_report(tf, ds[0], ds[1], aux)), o, out);
  }
  if (cmd == "bergman") {
    BergmanFan b = bergman_fan(matroid_from_json(read_json_file(o.matroid)));
    Json j = fan_to_json(b.tropical.fan, &b.tropical.weight);
    j["flats"] = Json::array();
    for (auto f : b.ray_flats) j["flats"].push_back(elements_of(f));
    return emit(j, o, out);
  }
  if (cmd == "product") {
    FanInput a = fan_from_json(read_json_file(o.fan));
    FanInput b = fan_from_json(read_json_file(o.fan2));
    if (a.weight && b.weight) {
      TropicalFan p = product_tropical(make_tropical_fan(a.fan, *a.weight), make_tropical_fan(b.fan, *b.weight));
      return emit(fan_to_json(p.fan, &p.weight), o, out);
    }
    return emit(fan_to_json(product_fan(a.fan, b.fan)), o, out);
  }
  if (cmd == "star") {
    FanInput in = fan_from_json(read_json_file(o.fan));
    Star s = star(in.fan, parse_cone_key(o.cone));
    Json j;
    if (in.weight) {
      MinkowskiWeight w = star_weight(s, *in.weight);
      j = fan_to_json(s.fan, &w);
    } else {
      j = fan_to_json(s.fan);
    }
    j["ray_lift"] = s.ray_lift;
    return emit(j, o, out);
  }
  if (cmd == "stellar") {
    FanInput in = fan_from_json(read_json_file(o.fan));
    StellarResult r = stellar_subdivide(in.fan, parse_point(o.point));
    Json j;
    if (in.weight) {
      MinkowskiWeight w = transport_weight(make_tropical_fan(in.fan, *in.weight), r.fan, r.containment);
      j = fan_to_json(r.fan, &w);
    } else {
      j = fan_to_json(r.fan);
    }
    j["containment"] = r.containment;
    j["new_ray"] = r.new_ray ? Json(*r.new_ray) : Json(nullptr);
    return emit(j, o, out);
  }
  if (cmd == "modify") {
    TropicalFan tf = tropical_from_json(read_json_file(o.fan));
    Modification m = tropical_modification(tf, load_divisor(o.divisor));
    Json j = fan_to_json(m.tropical.fan, &m.tropical.weight);
    j["down_ray"] = m.down_ray;
    return emit(j, o, out);
  }
  if (cmd == "act") {
    TropicalFan tf = tropical_from_json(read_json_file(o.fan));
    TropicalFan a = act_divisor_fan(tf, load_divisor(o.divisor));
    return emit(fan_to_json(a.fan, &a.weight), o, out);
  }
  if (cmd == "mixedvol") {
    if (o.polytopes.empty()) throw InputError("mixedvol needs at least one --polytope");
    std::vector<PolytopeInput> ps;
    for (const auto& p : o.polytopes) ps.push_back(polytope_from_json(read_json_file(p)));
    for (const auto& p : ps)
      if (!(p.fan == ps.front().fan)) throw InputError("polytopes must share one fan");
    std::vector<RatVector> rhs;
    for (const auto& p : ps) rhs.push_back(p.rhs);
    const std::size_t n = ps.front().fan.ambient_dim();
    if (rhs.size() == 1) rhs.assign(n, rhs.front());
    PolytopeBridge b = polytope_bridge(ps.front().fan, rhs);
    return emit(Json{{"mixed_degree", rational_to_json(b.mixed_degree)},
                     {"mixed_volume", rational_to_json(b.mixed_volume)},
                     {"normalization", rational_to_json(b.normalization)}},
                o, out);
  }
  if (cmd == "volpoly") {
    TropicalFan tf = tropical_from_json(read_json_file(o.fan));
    Polynomial p = volume_polynomial(tf);
    Json j = to_json(p);
    if (tf.fan.dim() == 2) j["inertia"] = to_json(inertia(volume_poly_2d(tf).matrix));
    return emit(j, o, out);
  }
  throw InputError("unknown command '" + cmd + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on marked tropical fans"};
  app.require_subcommand(1);
  Options o;
  auto fan_opt = [&](CLI::App* sub) { sub->add_option("--fan", o.fan, "fan JSON file")->required(); };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", o.out, "write the result here instead of stdout"); };

  auto* validate_cmd = app.add_subcommand("validate", "check simpliciality, purity and the fan condition");
  fan_opt(validate_cmd);
  validate_cmd->add_flag("--skip-fan-condition", o.skip_fan_condition, "skip pairwise intersection checks");
  auto* balance_cmd = app.add_subcommand("balance", "check the balancing condition of the weights");
  fan_opt(balance_cmd);
  auto* degree_cmd = app.add_subcommand("degree", "mixed degree of divisors");
  fan_opt(degree_cmd);
  degree_cmd->add_option("--divisors", o.divisors, "divisor list JSON")->required();
  auto* convexity_cmd = app.add_subcommand("convexity", "classify a divisor");
  fan_opt(convexity_cmd);
  convexity_cmd->add_option("--divisor", o.divisor, "divisor JSON")->required();
  convexity_cmd->add_flag("--weak", o.weak, "only decide convexity");
  auto* lorentzian_cmd = app.add_subcommand("lorentzian", "decide the Lorentzian property");
  fan_opt(lorentzian_cmd);
  lorentzian_cmd->add_option("--jobs", o.jobs, "worker threads for star checks")->check(CLI::PositiveNumber);
  lorentzian_cmd->add_option("--samples", o.samples, "also run the sampled definition check");
  lorentzian_cmd->add_option("--seed", o.seed, "seed for sampling");
  auto* af_cmd = app.add_subcommand("af", "Alexandrov-Fenchel report for D1, D2 and auxiliary divisors");
  fan_opt(af_cmd);
  af_cmd->add_option("--divisors", o.divisors, "divisor list JSON: D1, D2, aux...")->required();
  auto* bergman_cmd = app.add_subcommand("bergman", "Bergman fan of a matroid");
  bergman_cmd->add_option("--matroid", o.matroid, "matroid JSON")->required();
  auto* product_cmd = app.add_subcommand("product", "product of two fans");
  fan_opt(product_cmd);
  product_cmd->add_option("--fan2", o.fan2, "second fan JSON")->required();
  auto* star_cmd = app.add_subcommand("star", "star of a cone");
  fan_opt(star_cmd);
  star_cmd->add_option("--cone", o.cone, "ray indices, e.g. 0,2")->required();
  auto* stellar_cmd = app.add_subcommand("stellar", "stellar subdivision at a point");
  fan_opt(stellar_cmd);
  stellar_cmd->add_option("--point", o.point, "coordinates, e.g. 1,1/2")->required();
  auto* modify_cmd = app.add_subcommand("modify", "tropical modification along a divisor");
  fan_opt(modify_cmd);
  modify_cmd->add_option("--divisor", o.divisor, "divisor JSON")->required();
  auto* act_cmd = app.add_subcommand("act", "divisor acting on the fan");
  fan_opt(act_cmd);
  act_cmd->add_option("--divisor", o.divisor, "divisor JSON")->required();
  auto* mixedvol_cmd = app.add_subcommand("mixedvol", "mixed volume of polytopes on a complete fan");
  mixedvol_cmd->add_option("--polytope", o.polytopes, "polytope JSON (repeatable)")->required();
  auto* volpoly_cmd = app.add_subcommand("volpoly", "volume polynomial");
  fan_opt(volpoly_cmd);
  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) out_opt(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kInputError;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run_command(cmd, o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kPreconditionFailure;
  } catch (const InvariantError& e) {
    err << "internal invariant breach: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace tropfan
