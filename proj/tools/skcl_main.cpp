// skcl: command-line front end for the skew Clifford algebra engine.
//
// Every computation subcommand reads a presentation (JSON file or --inline),
// prints a single JSON report on stdout and exits 0.  Exit codes: 2 for
// validation/usage errors, 3 for precondition errors (trivial algebra, degree
// cap, ...), 4 for internal invariant breaches.

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "skewclifford/errors.hpp"
#include "skewclifford/fixtures.hpp"
#include "skewclifford/graded.hpp"
#include "skewclifford/json_io.hpp"
#include "skewclifford/presentation.hpp"
#include "skewclifford/rewrite.hpp"
#include "skewclifford/structure.hpp"

namespace {

using skcl::Json;

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

int degree_cap() {
    if (const char* env = std::getenv("SKCL_DEGREE_CAP")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 0) return cap;
        } catch (...) {
        }
        throw skcl::ValidationError("SKCL_DEGREE_CAP must be a non-negative integer");
    }
    return skcl::kDefaultDegreeCap;
}

struct Input {
    std::string raw;  // bytes the digest is taken over
    skcl::PresentationFile file;
    skcl::Presentation presentation;
};

Input load_input(const std::string& path, const std::string& inline_json) {
    std::string raw;
    if (!inline_json.empty()) {
        raw = inline_json;
    } else if (!path.empty()) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw skcl::ValidationError("cannot read presentation file \"" + path + "\"");
        std::ostringstream buf;
        buf << in.rdbuf();
        raw = buf.str();
    } else {
        throw skcl::ValidationError("no presentation given: pass a file path or --inline");
    }
    Json parsed;
    try {
        parsed = Json::parse(raw);
    } catch (const Json::parse_error& e) {
        throw skcl::ValidationError(std::string("malformed JSON: ") + e.what());
    }
    skcl::PresentationFile pf = skcl::presentation_file_from_json(parsed);
    skcl::Presentation p = skcl::validate(pf.mu, pf.b);
    return Input{std::move(raw), std::move(pf), std::move(p)};
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json report(const std::string& command, const Input& in, Json result) {
    Json j;
    j["command"] = command;
    j["input-digest"] = sha256_hex(in.raw);
    if (in.file.name) j["input-name"] = *in.file.name;
    j["result"] = std::move(result);
    return j;
}

skcl::Element element_arg(const std::string& text, int letters) {
    Json parsed;
    try {
        parsed = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw skcl::ValidationError(std::string("malformed element JSON: ") + e.what());
    }
    return skcl::element_from_json(parsed, letters);
}

std::vector<skcl::Mat> matrices_arg(const std::string& text) {
    Json parsed;
    try {
        parsed = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw skcl::ValidationError(std::string("malformed matrices JSON: ") + e.what());
    }
    if (!parsed.is_array())
        throw skcl::ValidationError("--matrices expects a JSON array of matrices");
    std::vector<skcl::Mat> ms;
    for (const Json& m : parsed) ms.push_back(skcl::mat_from_json(m));
    return ms;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with skew Clifford algebras"};
    app.require_subcommand(1);

    std::string path, inline_json;
    bool want_trace = false;

    auto add_presentation_opts = [&](CLI::App* cmd) {
        cmd->add_option("file", path, "presentation JSON file");
        cmd->add_option("--inline", inline_json, "presentation JSON given inline");
    };

    auto* cmd_validate = app.add_subcommand("validate", "check the (mu, B) invariants");
    add_presentation_opts(cmd_validate);

    auto* cmd_dim = app.add_subcommand("dim", "dimension of sCl(V, mu, phi)");
    add_presentation_opts(cmd_dim);
    cmd_dim->add_flag("--trace", want_trace, "include the completion trace");

    auto* cmd_basis = app.add_subcommand("basis", "irreducible-word basis");
    add_presentation_opts(cmd_basis);

    std::string element_text;
    auto* cmd_nf = app.add_subcommand("nf", "normal form of an element");
    add_presentation_opts(cmd_nf);
    cmd_nf->add_option("--element", element_text, "element JSON")->required();

    std::string a_text, b_text;
    auto* cmd_mul = app.add_subcommand("mul", "product of two elements");
    add_presentation_opts(cmd_mul);
    cmd_mul->add_option("--a", a_text, "left factor JSON")->required();
    cmd_mul->add_option("--b", b_text, "right factor JSON")->required();

    auto* cmd_tfae = app.add_subcommand("tfae", "the four equivalent full-dimension tests");
    add_presentation_opts(cmd_tfae);

    auto* cmd_reduce = app.add_subcommand("reduce", "proof-case generator elimination");
    add_presentation_opts(cmd_reduce);

    int degree = -1;
    auto* cmd_pbw = app.add_subcommand("pbw", "filtered profile vs quantum exterior profile");
    add_presentation_opts(cmd_pbw);
    cmd_pbw->add_option("--degree", degree, "compare up to this degree (default n)");

    auto* cmd_qcentral = app.add_subcommand("qcentral", "is q = zBz^t central in the Koszul dual");
    add_presentation_opts(cmd_qcentral);

    bool homog_single = false, homog_multi = false;
    std::string matrices_text;
    auto* cmd_homog = app.add_subcommand("homogenize", "graded homogenization A or A(n)");
    add_presentation_opts(cmd_homog);
    cmd_homog->add_flag("--single", homog_single, "adjoin one central degree-two generator y");
    cmd_homog->add_flag("--multi", homog_multi, "adjoin y_1..y_n (graded skew Clifford algebra)");
    cmd_homog->add_option("--matrices", matrices_text,
                          "mu-symmetric matrices summing to 2B (default: partition output)");

    auto* cmd_partition =
        app.add_subcommand("partition", "write 2B as n independent mu-symmetric matrices");
    add_presentation_opts(cmd_partition);

    auto* cmd_asreg = app.add_subcommand("asreg", "regular-homogenization matrices");
    add_presentation_opts(cmd_asreg);

    std::string target;
    auto* cmd_hilbert = app.add_subcommand("hilbert", "graded dimensions of a quotient");
    add_presentation_opts(cmd_hilbert);
    cmd_hilbert->add_option("--target", target, "lambda | koszul-dual | A | An-eliminated")
        ->required()
        ->check(CLI::IsMember({"lambda", "koszul-dual", "A", "An-eliminated"}));
    cmd_hilbert->add_option("--degree", degree, "compute dimensions 0..degree")->required();

    auto* cmd_central = app.add_subcommand("central-check",
                                           "centrality of y from the quadratic relations of A");
    add_presentation_opts(cmd_central);
    cmd_central->add_option("--degree", degree, "verify membership up to this degree")->required();

    std::string which;
    std::vector<std::string> param_kv;
    auto* cmd_examples = app.add_subcommand("examples", "emit a bundled fixture presentation");
    cmd_examples->add_option("--which", which, "fixture identifier")->required();
    cmd_examples->add_option("--param", param_kv, "fixture parameter key=value (repeatable)");

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            throw skcl::ValidationError(std::string("usage error: ") + e.what());
        }

        if (cmd_examples->parsed()) {
            std::map<std::string, skcl::Rat> params;
            for (const std::string& kv : param_kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw skcl::ValidationError("--param expects key=value, got \"" + kv + "\"");
                params[kv.substr(0, eq)] = skcl::Rat::parse(kv.substr(eq + 1));
            }
            skcl::Presentation p = skcl::make_fixture(which, params);
            std::string name = which;
            if (!params.empty()) {
                name += "(";
                bool first = true;
                for (const auto& [k, v] : params) {
                    if (!first) name += ",";
                    name += k + "=" + v.str();
                    first = false;
                }
                name += ")";
            }
            emit(skcl::presentation_file_to_json(p.mu(), p.b(), name));
            return 0;
        }

        Input in = load_input(path, inline_json);
        const skcl::Presentation& p = in.presentation;
        const int cap = degree_cap();

        if (cmd_validate->parsed()) {
            Json result;
            result["valid"] = true;
            result["n"] = p.n();
            emit(report("validate", in, std::move(result)));
        } else if (cmd_dim->parsed()) {
            skcl::RewriteSystem sys = skcl::complete(skcl::initial_system(p));
            Json result;
            result["dimension"] = skcl::dimension(p);
            Json rep = report("dim", in, std::move(result));
            if (want_trace) rep["trace"] = sys.trace();
            emit(rep);
        } else if (cmd_basis->parsed()) {
            std::vector<skcl::Word> words = skcl::basis(p);
            Json list = Json::array();
            for (const skcl::Word& w : words) list.push_back(skcl::word_to_json(w));
            Json result;
            result["dimension"] = words.size();
            result["basis"] = std::move(list);
            emit(report("basis", in, std::move(result)));
        } else if (cmd_nf->parsed()) {
            skcl::RewriteSystem sys = skcl::complete(skcl::initial_system(p));
            skcl::Element e = element_arg(element_text, p.n());
            Json result;
            result["element"] = skcl::element_to_json(skcl::normal_form(sys, e));
            emit(report("nf", in, std::move(result)));
        } else if (cmd_mul->parsed()) {
            skcl::RewriteSystem sys = skcl::complete(skcl::initial_system(p));
            skcl::Element a = element_arg(a_text, p.n());
            skcl::Element b = element_arg(b_text, p.n());
            Json result;
            result["element"] = skcl::element_to_json(skcl::multiply(sys, a, b));
            emit(report("mul", in, std::move(result)));
        } else if (cmd_tfae->parsed()) {
            emit(report("tfae", in, skcl::tfae_to_json(skcl::tfae(p))));
        } else if (cmd_reduce->parsed()) {
            emit(report("reduce", in, skcl::reduction_to_json(skcl::reduce_presentation(p))));
        } else if (cmd_pbw->parsed()) {
            int d = degree < 0 ? p.n() : degree;
            Json result;
            result["degree"] = d;
            result["pbw"] = skcl::pbw_check(p, d);
            result["profile"] = skcl::filtered_dimension_profile(p, d);
            emit(report("pbw", in, std::move(result)));
        } else if (cmd_qcentral->parsed()) {
            Json result;
            result["central"] = skcl::q_central(p);
            emit(report("qcentral", in, std::move(result)));
        } else if (cmd_homog->parsed()) {
            if (homog_single == homog_multi)
                throw skcl::ValidationError("homogenize needs exactly one of --single / --multi");
            Json result;
            if (homog_single) {
                result = skcl::graded_to_json(skcl::homogenize_single(p));
            } else {
                std::vector<skcl::Mat> ms = matrices_text.empty()
                                                ? skcl::partition(p).matrices
                                                : matrices_arg(matrices_text);
                result = skcl::graded_to_json(skcl::homogenize_multi(p, ms));
            }
            emit(report("homogenize", in, std::move(result)));
        } else if (cmd_partition->parsed()) {
            emit(report("partition", in, skcl::partition_to_json(skcl::partition(p))));
        } else if (cmd_asreg->parsed()) {
            skcl::AsregResult ar = skcl::asreg_matrices(p);
            Json result;
            Json ms = Json::array();
            for (const skcl::Mat& m : ar.matrices) ms.push_back(skcl::mat_to_json(m));
            result["matrices"] = std::move(ms);
            Json norm;
            norm["order"] = ar.normalization.order;
            Json scales = Json::array();
            for (const skcl::Rat& s : ar.normalization.scales)
                scales.push_back(skcl::rat_to_json(s));
            norm["scales"] = std::move(scales);
            result["normalization"] = std::move(norm);
            result["normalized-mu"] = skcl::mat_to_json(ar.normalized.mu());
            result["normalized-b"] = skcl::mat_to_json(ar.normalized.b());
            Json orig = Json::array();
            for (const skcl::Mat& m : ar.matrices_original_basis)
                orig.push_back(skcl::mat_to_json(m));
            result["matrices-original-basis"] = std::move(orig);
            result["trace"] = ar.trace;
            emit(report("asreg", in, std::move(result)));
        } else if (cmd_hilbert->parsed()) {
            skcl::GradedPresentation g;
            if (target == "lambda") {
                g = skcl::lambda_presentation(p.mu());
            } else if (target == "koszul-dual") {
                g = skcl::koszul_dual_presentation(p.mu());
            } else if (target == "A") {
                g = skcl::homogenize_single(p);
            } else {  // An-eliminated
                skcl::AsregResult ar = skcl::asreg_matrices(p);
                skcl::GradedPresentation an = skcl::homogenize_multi(ar.normalized, ar.matrices);
                g = skcl::eliminate_y(an, ar.matrices).presentation;
            }
            skcl::HilbertPrefix hp = skcl::hilbert_prefix(g, degree, cap);
            Json result;
            result["target"] = target;
            result["degree"] = degree;
            result["coefficients"] = hp.coefficients;
            emit(report("hilbert", in, std::move(result)));
        } else if (cmd_central->parsed()) {
            skcl::GradedPresentation g = skcl::homogenize_single(p);
            std::vector<skcl::Element> cands = skcl::central_candidates_single(p);
            Json result;
            result["central"] = skcl::centrality_from_quadratic(g, cands, degree, cap);
            Json cj = Json::array();
            for (const skcl::Element& c : cands) cj.push_back(skcl::element_to_json(c));
            result["candidates"] = std::move(cj);
            emit(report("central-check", in, std::move(result)));
        } else {
            throw skcl::ValidationError("unknown subcommand");
        }
        return 0;
    } catch (const skcl::ValidationError& e) {
        Json err;
        err["error"]["kind"] = "validation";
        err["error"]["message"] = e.what();
        if (!e.violations().empty())
            err["error"]["violations"] = skcl::violations_to_json(e.violations());
        emit(err);
        return 2;
    } catch (const skcl::PreconditionError& e) {
        Json err;
        err["error"]["kind"] = "precondition";
        err["error"]["message"] = e.what();
        emit(err);
        return 3;
    } catch (const skcl::InternalError& e) {
        Json err;
        err["error"]["kind"] = "internal";
        err["error"]["message"] = e.what();
        emit(err);
        return 4;
    }
}
