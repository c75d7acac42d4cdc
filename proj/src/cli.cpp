#include "sqdet/cli.hpp"

#include "sqdet/errors.hpp"
#include "sqdet/flagspace.hpp"
#include "sqdet/parallel.hpp"
#include "sqdet/random.hpp"

#include <chrono>
#include <fstream>
#include <ostream>

namespace sqdet {

namespace {

class Stopwatch {
public:
    explicit Stopwatch(bool enabled) : enabled_(enabled) {}
    void lap(Json& report, const char* name) {
        if (!enabled_) return;
        const auto now = std::chrono::steady_clock::now();
        report["timings_ms"][name] = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
    }

private:
    bool enabled_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

const AffineOrientedMatroid& om_of(const Instance& inst) {
    if (!inst.om) throw InternalError("instance without an oriented matroid");
    return *inst.om;
}

Json header(const Instance& inst, const RunConfig& cfg, const char* command) {
    const auto& om = om_of(inst);
    Json j;
    j["tool"] = "sqdet";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["input_digest"] = "fnv1a64:" + inst.digest;
    j["instance"]["type"] = inst.kind;
    j["instance"]["n"] = om.size();
    j["instance"]["r"] = om.rank();
    j["instance"]["elements"] = om.ground();
    if (cfg.nudge) {
        j["instance"]["nudge"] = *cfg.nudge;
        if (inst.arrangement) j["instance"]["arrangement"] = arrangement_to_json(*inst.arrangement);
    }
    return j;
}

Json topes_json(const AffineOrientedMatroid& om, const std::vector<Tope>& topes) {
    Json out = Json::array();
    for (const auto& t : topes) out.push_back(format_sign_vector(t.sign, om.ground()));
    return out;
}

void add_matrices(Json& report, const IntersectionForm& s, const IntersectionForm& sq) {
    report["matrices"]["S"] = constant_matrix_json(s.s);
    report["matrices"]["Sq"] = poly_matrix_json(sq.s);
}

struct Checks {
    Json list = Json::array();
    bool all_pass = true;

    void add(const std::string& name, bool pass, Json witness = nullptr) {
        Json c;
        c["name"] = name;
        c["pass"] = pass;
        if (!witness.is_null()) c["witness"] = std::move(witness);
        list.push_back(std::move(c));
        all_pass = all_pass && pass;
    }
    void skip(const std::string& name, const std::string& why) {
        Json c;
        c["name"] = name;
        c["skipped"] = why;
        list.push_back(std::move(c));
    }
};

Json pair_witness(const std::vector<Tope>& topes, std::size_t a, std::size_t b) {
    return Json::array({topes[a].key(), topes[b].key()});
}

bool palindromic(const IntPoly& h, int dim) {
    for (int k = 0; k <= 2 * dim; ++k)
        if (h.coeff(static_cast<std::size_t>(k)) != h.coeff(static_cast<std::size_t>(2 * dim - k))) return false;
    return true;
}

void structural_checks(Checks& checks, const AffineOrientedMatroid& om, const MeetTable& meets,
                       const IntersectionForm& s, const IntersectionForm& sq) {
    const auto& topes = meets.topes();
    checks.add("S symmetric", s.s.is_symmetric());
    checks.add("S_q symmetric", sq.s.is_symmetric());

    const IntMatrix s1 = s.s.evaluate(1), sq1 = sq.s.evaluate(1);
    std::optional<std::pair<std::size_t, std::size_t>> bad_spec, bad_euler, bad_palin, bad_low;
    for (std::size_t a = 0; a < meets.size(); ++a)
        for (std::size_t b = 0; b < meets.size(); ++b) {
            if (!bad_spec && s1(a, b) != sq1(a, b)) bad_spec = {a, b};
            const auto& m = meets.meet(a, b);
            if (!m) continue;
            if (!bad_euler && m->euler_characteristic() != 1) bad_euler = {a, b};
            if (!bad_palin && !palindromic(h_poly(*m), m->dim)) bad_palin = {a, b};
            const int d = meets.separation(a, b);
            const IntPoly& e = sq.s(a, b);
            if (!bad_low && (e.low_degree() != d || e.coeff(static_cast<std::size_t>(d)) != (d % 2 == 0 ? 1 : -1)))
                bad_low = {a, b};
        }
    auto witness = [&](const auto& w) { return w ? pair_witness(topes, w->first, w->second) : Json(nullptr); };
    checks.add("q=1 specialization of S_q is S", !bad_spec, witness(bad_spec));
    checks.add("Euler relation on meet faces", !bad_euler, witness(bad_euler));
    checks.add("h-polynomial palindromic on meet faces", !bad_palin, witness(bad_palin));
    checks.add("lowest term of S_q(A,B) is (-q)^d(A,B)", !bad_low, witness(bad_low));

    std::optional<std::size_t> bad_diag;
    for (std::size_t a = 0; a < meets.size() && !bad_diag; ++a) {
        const IntPoly& e = sq.s(a, a);
        if (e.coeff(0) != 1 || e.degree() != 2 * om.rank()) bad_diag = a;
    }
    checks.add("S_q diagonal has constant term 1 and degree 2r", !bad_diag,
               bad_diag ? Json(topes[*bad_diag].key()) : Json(nullptr));

    const BigInt det_s = int_det(s1);
    checks.add("det S positive", det_s > 0, det_s > 0 ? Json(nullptr) : Json(det_s.get_str()));
    const BigInt mu_dual = mobius_plus(dual(om.matroid()));
    Json w;
    if (mu_dual != BigInt(static_cast<unsigned long>(topes.size()))) {
        w["n_topes"] = topes.size();
        w["mu_plus_dual"] = mu_dual.get_str();
    }
    checks.add("#bounded topes = mu+(M*)", w.is_null(), w);
}

void flagspace_checks(Checks& checks, Json& detail, const AffineOrientedMatroid& om, const MeetTable& meets,
                      const IntersectionForm& s) {
    KernelReport rep;
    try {
        rep = check_basis_of_kernel(om, meets.topes(), s.s);
    } catch (const SizeError& e) {
        checks.skip("flagspace", e.what());
        return;
    }
    const auto& topes = meets.topes();
    checks.add("phi(A) in ker d", rep.all_in_kernel,
               rep.kernel_witness ? Json(topes[*rep.kernel_witness].key()) : Json(nullptr));
    checks.add("Gram identity <phi(A),phi(B)> = S(A,B)", rep.gram_identity,
               rep.gram_witness ? pair_witness(topes, rep.gram_witness->first, rep.gram_witness->second)
                                : Json(nullptr));
    checks.add("rank of phi-matrix = #bounded topes", rep.rank == rep.n_topes);
    checks.add("Smith elementary divisors all 1", rep.unit_divisors);
    detail["n_bases"] = rep.n_bases;
    detail["mu_plus_dual"] = rep.mu_plus_dual.get_str();
    Json divisors = Json::array();
    for (const auto& d : rep.divisors)
        if (d != 1) divisors.push_back(d.get_str());
    detail["non_unit_divisors"] = divisors;
}

void y_matrix_checks(Checks& checks, Json& detail, const Arrangement& arr, std::uint64_t seed) {
    const YMatrix y = build_y_matrix(arr, seed);
    Json xi = Json::array();
    for (const auto& c : y.xi) xi.push_back(c.get_str());
    detail["xi"] = xi;
    detail["n_bases"] = y.bases.size();
    detail["det_y"] = y.det_y.get_str();
    detail["det_Yq_at_1"] = y.det_yq_at_one.get_str();
    if (y.det_yq) detail["det_Yq"] = poly_json(*y.det_yq);
    checks.add("det y = +-1", abs(y.det_y) == 1, abs(y.det_y) == 1 ? Json(nullptr) : Json(y.det_y.get_str()));
    checks.add("rows of y expand phi(mu(b)) in rescaled monomials", y.expansion_identity);
    checks.add("pairing of xi-bounded regions counts common vertices", y.extended_gram);
}

} // namespace

Instance prepare_instance(Instance inst, const RunConfig& cfg) {
    if (!cfg.nudge) return inst;
    if (!inst.arrangement) throw InputError("--nudge needs an arrangement input");
    auto nudged = nudge_offsets(*inst.arrangement, *cfg.nudge);
    if (!nudged) throw InvariantError("--nudge: no generic offsets found");
    Instance out = instance_from_arrangement(*nudged);
    out.digest = inst.digest;
    return out;
}

CommandResult cmd_check(const Instance& inst, const RunConfig& cfg) {
    const auto& om = om_of(inst);
    Stopwatch clock(cfg.timings);
    CommandResult res{header(inst, cfg, "check"), kExitOk};
    const Verification v = verify(om, cfg.jobs);
    clock.lap(res.report, "verify");
    res.report["instance"]["n_bounded_topes"] = v.S.topes.size();
    res.report["topes"] = topes_json(om, v.S.topes);
    res.report["verdict"] = verdict_json(v);
    if (!v.conjecture.match) res.exit_code = kExitMismatch;
    if (cfg.include_matrices || !v.conjecture.match || v.S.topes.size() <= kMatrixReportLimit)
        add_matrices(res.report, v.S, v.Sq);
    return res;
}

CommandResult cmd_matrix(const Instance& inst, const RunConfig& cfg) {
    const auto& om = om_of(inst);
    CommandResult res{header(inst, cfg, "matrix"), kExitOk};
    MeetTable meets(om, bounded_topes(om), cfg.jobs);
    res.report["topes"] = topes_json(om, meets.topes());
    add_matrices(res.report, build_S(meets), build_Sq(meets));
    return res;
}

CommandResult cmd_det(const Instance& inst, const RunConfig& cfg) {
    const auto& om = om_of(inst);
    CommandResult res{header(inst, cfg, "det"), kExitOk};
    MeetTable meets(om, bounded_topes(om), cfg.jobs);
    res.report["n_topes"] = meets.size();
    res.report["det_S"] = poly_det(build_S(meets).s).coeff(0).get_str();
    res.report["det_Sq"] = poly_json(poly_det(build_Sq(meets).s));
    return res;
}

CommandResult cmd_rhs(const Instance& inst, const RunConfig& cfg) {
    const auto& om = om_of(inst);
    CommandResult res{header(inst, cfg, "rhs"), kExitOk};
    const ClassicalRhs classical = rhs_classical(om.matroid());
    res.report["rhs_S"] = classical.value.get_str();
    res.report["rhs_Sq"] = poly_json(rhs_q(om.matroid()).value);
    res.report["factors"] = factors_json(classical.factors);
    return res;
}

CommandResult cmd_invariants(const Instance& inst, const RunConfig& cfg) {
    const auto& om = om_of(inst);
    Stopwatch clock(cfg.timings);
    CommandResult res{header(inst, cfg, "invariants"), kExitOk};
    MeetTable meets(om, bounded_topes(om), cfg.jobs);
    const IntersectionForm s = build_S(meets), sq = build_Sq(meets);
    res.report["instance"]["n_bounded_topes"] = meets.size();
    clock.lap(res.report, "forms");

    Checks structural, flag, ymat;
    structural_checks(structural, om, meets, s, sq);
    clock.lap(res.report, "structural");
    Json flag_detail, y_detail;
    flagspace_checks(flag, flag_detail, om, meets, s);
    clock.lap(res.report, "flagspace");
    if (inst.arrangement) {
        y_matrix_checks(ymat, y_detail, *inst.arrangement, cfg.seed);
        clock.lap(res.report, "y_matrix");
    } else {
        ymat.skip("y matrix", "only available for arrangement inputs");
    }

    res.report["structural"] = structural.list;
    res.report["flagspace"]["checks"] = flag.list;
    if (!flag_detail.is_null()) res.report["flagspace"]["detail"] = flag_detail;
    res.report["y_matrix"]["checks"] = ymat.list;
    if (!y_detail.is_null()) res.report["y_matrix"]["detail"] = y_detail;
    const bool ok = structural.all_pass && flag.all_pass && ymat.all_pass;
    res.report["all_pass"] = ok;
    res.exit_code = ok ? kExitOk : kExitError;
    return res;
}

int cmd_random(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const int dim = cfg.dim.value_or(2);
    const int n = cfg.n.value_or(8);
    if (dim < 1 || dim > 4) throw InputError("--dim must be in [1, 4]");
    if (n < dim || n > 10) throw InputError("--n must be in [dim, 10]");
    if (cfg.count < 0) throw InputError("--count must be nonnegative");

    const auto count = static_cast<std::size_t>(cfg.count);
    std::vector<Json> lines(count);
    std::vector<int> codes(count, kExitOk);
    RunConfig inner = cfg;
    inner.jobs = 1;
    parallel_for(count, cfg.jobs, [&](std::size_t i) {
        const std::uint64_t seed = mix_seed(cfg.seed, i);
        Json line;
        line["index"] = i;
        line["seed"] = seed;
        auto arr = random_arrangement(dim, n, seed);
        if (!arr) {
            line["skipped"] = "retry limit reached while drawing a generic arrangement";
            codes[i] = -1;
        } else {
            line["arrangement"] = arrangement_to_json(*arr);
            CommandResult r = cmd_check(instance_from_arrangement(*arr), inner);
            line["report"] = std::move(r.report);
            codes[i] = r.exit_code;
        }
        lines[i] = std::move(line);
    });

    std::size_t matches = 0, mismatches = 0, skipped = 0;
    for (std::size_t i = 0; i < count; ++i) {
        out << lines[i].dump() << '\n';
        if (codes[i] < 0)
            ++skipped;
        else if (codes[i] == kExitMismatch)
            ++mismatches;
        else
            ++matches;
    }
    Json summary;
    summary["summary"]["instances"] = count;
    summary["summary"]["dim"] = dim;
    summary["summary"]["n"] = n;
    summary["summary"]["seed"] = cfg.seed;
    summary["summary"]["matches"] = matches;
    summary["summary"]["mismatches"] = mismatches;
    summary["summary"]["skipped"] = skipped;
    out << summary.dump() << '\n';
    err << "random: " << count << " instances, " << matches << " matches, " << mismatches << " mismatches, "
        << skipped << " skipped\n";
    return mismatches > 0 ? kExitMismatch : kExitOk;
}

namespace {

Json error_json(const char* type, const std::string& message) {
    Json j;
    j["error"]["type"] = type;
    j["error"]["message"] = message;
    return j;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.command == "random") {
        if (cfg.input) throw InputError("random takes generator parameters, not --input");
        return cmd_random(cfg, out, err);
    }
    if (!cfg.input) throw InputError(cfg.command + ": --input is required");
    if (cfg.dim || cfg.n) throw InputError(cfg.command + ": --dim/--n only apply to random");
    const Instance inst = prepare_instance(load_instance_file(*cfg.input), cfg);

    CommandResult res;
    if (cfg.command == "check")
        res = cmd_check(inst, cfg);
    else if (cfg.command == "matrix")
        res = cmd_matrix(inst, cfg);
    else if (cfg.command == "det")
        res = cmd_det(inst, cfg);
    else if (cfg.command == "rhs")
        res = cmd_rhs(inst, cfg);
    else if (cfg.command == "invariants")
        res = cmd_invariants(inst, cfg);
    else
        throw InputError("unknown command '" + cfg.command + "'");
    out << res.report.dump(2) << '\n';
    return res.exit_code;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.out) {
            std::ofstream file(*cfg.out, std::ios::binary);
            if (!file) throw InputError("cannot open output file '" + *cfg.out + "'");
            return dispatch(cfg, file, err);
        }
        return dispatch(cfg, out, err);
    } catch (const GenericityError& e) {
        Json j = error_json("genericity", e.what());
        j["error"]["coefficient_rank"] = e.report().coefficient_rank;
        j["error"]["augmented_rank"] = e.report().augmented_rank;
        err << j.dump(2) << '\n';
    } catch (const InputError& e) {
        err << error_json("input", e.what()).dump(2) << '\n';
    } catch (const InvariantError& e) {
        err << error_json("invariant", e.what()).dump(2) << '\n';
    } catch (const SizeError& e) {
        err << error_json("size", e.what()).dump(2) << '\n';
    } catch (const InternalError& e) {
        err << error_json("internal", e.what()).dump(2) << '\n';
    } catch (const std::exception& e) {
        err << error_json("internal", e.what()).dump(2) << '\n';
    }
    return kExitError;
}

} // namespace sqdet
