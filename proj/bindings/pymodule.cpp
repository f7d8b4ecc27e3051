#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spgap/pipeline.hpp"

namespace py = pybind11;
using namespace spgap;

namespace {

py::dict cert_dict(const Certificate& c) {
    py::dict d;
    d["n"] = c.n;
    d["flavor"] = to_string(c.flavor);
    d["target"] = c.target_part;
    d["lambda_ap"] = c.lambda_ap;
    d["alpha"] = c.alpha;
    d["lambda_cert"] = c.lambda_cert;
    d["status"] = c.status;
    d["kappa"] = c.kappa;
    d["s_size"] = c.s_size;
    return d;
}

}  // namespace

PYBIND11_MODULE(_spgap, m) {
    m.doc() = "Steinberg-presentation spectral gap toolkit (file-oriented surface)";

    m.def(
        "presentation_json",
        [](int n, const std::string& flavor) {
            return dump_json(steinberg_presentation(n, parse_flavor(flavor)));
        },
        py::arg("n"), py::arg("flavor") = "G",
        "Generators and relators in the canonical text encoding, as JSON.");

    m.def(
        "validate_presentation",
        [](int n, const std::string& flavor) {
            const auto rep = validate(steinberg_presentation(n, parse_flavor(flavor)));
            py::dict d;
            d["checked"] = rep.checked;
            d["definitional"] = rep.definitional;
            d["failures"] = rep.failures.size();
            d["ok"] = rep.ok();
            return d;
        },
        py::arg("n"), py::arg("flavor") = "G",
        "Evaluate every relator through the matrix model.");

    m.def(
        "laplacian_json",
        [](int n, const std::string& flavor, const std::string& target, double k) {
            const Presentation p = steinberg_presentation(n, parse_flavor(flavor));
            const TargetKind t = parse_target(target);
            const QMatrix mm = (t == TargetKind::Delta1 && k == 1.0)
                                   ? laplacian(p).full
                                   : target_matrix(decompose(p), t, mpq_class(k));
            return grmatrix_json(mm);
        },
        py::arg("n"), py::arg("flavor") = "G", py::arg("target") = "delta1",
        py::arg("k") = 1.0, "Target matrix over the group ring, as JSON.");

    m.def(
        "build_problem_file",
        [](int n, const std::string& flavor, const std::string& target, double k, int radius,
           const std::string& path) {
            RunConfig cfg;
            cfg.n = n;
            cfg.flavor = parse_flavor(flavor);
            cfg.target = target;
            cfg.k = k;
            cfg.radius = radius;
            const ProblemFile pf = build_problem(cfg);
            write_problem(pf, path);
            py::dict d;
            d["support_size"] = pf.E.size();
            d["rows"] = pf.M.rows();
            return d;
        },
        py::arg("n"), py::arg("flavor"), py::arg("target"), py::arg("k"), py::arg("radius"),
        py::arg("path"));

    m.def(
        "export_sdpa_file",
        [](const std::string& problem_path, const std::string& out_path) {
            const ProblemFile pf = read_problem(problem_path);
            export_sdpa(linearize(pf.M, pf.E), out_path);
        },
        py::arg("problem_path"), py::arg("out_path"));

    m.def(
        "solve_problem_file",
        [](const std::string& problem_path, const std::string& out_path, double lo, double hi,
           double width_tol, bool sym, double tol, long max_iter) {
            RunConfig cfg;
            const ProblemFile pf = read_problem(problem_path);
            cfg.n = pf.n;
            cfg.flavor = pf.flavor;
            cfg.lambda_lo = lo;
            cfg.lambda_hi = hi;
            cfg.width_tol = width_tol;
            cfg.sym = sym;
            cfg.solver.tol = tol;
            cfg.solver.max_iter = max_iter;
            const SolveOutcome so = solve_problem(pf, cfg);
            write_solution(so.sol, out_path);
            py::dict d;
            d["feasible"] = so.any_feasible;
            d["lambda_ap"] = so.sol.lambda_ap;
            d["iterations"] = so.sol.iterations;
            return d;
        },
        py::arg("problem_path"), py::arg("out_path"), py::arg("lo") = 0.0, py::arg("hi") = 1.0,
        py::arg("width_tol") = 1e-3, py::arg("sym") = true, py::arg("tol") = 1e-8,
        py::arg("max_iter") = 1000000);

    m.def(
        "certify_files",
        [](const std::string& problem_path, const std::string& solution_path,
           const std::string& cert_path) {
            const Certificate c =
                spgap::certify_files(read_problem(problem_path), read_solution(solution_path));
            write_certificate(c, cert_path);
            return cert_dict(c);
        },
        py::arg("problem_path"), py::arg("solution_path"), py::arg("cert_path"));

    m.def(
        "verify_certificate_file",
        [](const std::string& cert_path) {
            const VerifyResult r = verify_certificate(read_certificate(cert_path));
            py::dict d;
            d["ok"] = r.ok;
            d["message"] = r.message;
            d["alpha_replay"] = r.alpha_replay;
            d["lambda_cert_replay"] = r.lambda_cert_replay;
            return d;
        },
        py::arg("cert_path"));

    m.def(
        "run_pipeline_json",
        [](const std::string& config_json) {
            const RunResult rr = run_pipeline(run_config_from_json(config_json));
            py::dict d = cert_dict(rr.cert);
            d["solver_feasible"] = rr.solver_feasible;
            d["cert_path"] = rr.cert_path;
            d["report_path"] = rr.report_path;
            return d;
        },
        py::arg("config_json"), "Full pipeline from a RunConfig JSON string.");

    m.def("kazhdan_bound", &kazhdan_bound, py::arg("lambda_"), py::arg("s_size"),
          "sqrt(2 lambda / |S|) rounded down.");

    m.def(
        "induced_gap",
        [](double lam, int m, int n) { return induced_gap(mpq_class(lam), m, n).get_d(); },
        py::arg("lambda_"), py::arg("m"), py::arg("n"), "(n-2)/(m-2) * lambda.");

    m.def(
        "combined_bound",
        [](double lam_adj, double lam_sq, int n) {
            return combined_Hn_bound(mpq_class(lam_adj), mpq_class(lam_sq), n).get_d();
        },
        py::arg("lambda_adj"), py::arg("lambda_sq"), py::arg("n"),
        "(n-2) * lambda_adj + lambda_sq.");
}
