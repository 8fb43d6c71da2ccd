#include "qslab/cli.hpp"

#include "qslab/enumerate.hpp"
#include "qslab/qexpr.hpp"
#include "qslab/qproducts.hpp"
#include "qslab/theorems.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>

namespace qslab::cli {

namespace {

struct Options {
    long order = 200;
    long k_max = 4;
    long oracle_limit = 40;
    bool force_oracle_limit = false;
    bool list_partitions = false;
    std::string format = "text";
    std::string target;
    std::string check_id = "all";
    std::string lhs, rhs;
    long oracle_n = 0;
    std::string constraint;
};

std::string partition_str(const Partition& p) {
    if (p.empty()) return "(empty)";
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << "+";
        os << p[i];
    }
    return os.str();
}

int emit_reports(const std::vector<VerificationReport>& reports, const std::string& format,
                 std::ostream& out) {
    if (format == "json") {
        out << reports_json(reports) << "\n";
    } else if (format == "csv") {
        out << report_csv_header() << "\n";
        for (const auto& r : reports) out << report_csv(r) << "\n";
    } else {
        int failed = 0;
        for (const auto& r : reports) {
            out << report_line(r) << "\n";
            if (r.verdict != Verdict::Pass) ++failed;
        }
        out << reports.size() << " checks, " << failed << " failed\n";
    }
    return all_pass(reports) ? 0 : 1;
}

// registry names, oracle-constraint spellings ("dee", "reg:3", ...), or expressions
Series resolve_target(const std::string& target, long order) {
    if (registry_has(target)) return registry_eval(target, order);
    try {
        PartitionConstraint c = PartitionConstraint::parse(target);
        if (c.tag == PartitionConstraint::Tag::Reg) return gen_reg(c.param, order);
        return registry_eval(c.registry_name(), order);
    } catch (const std::invalid_argument&) {
    }
    return qexpr::eval_text(target, order);
}

int cmd_expand(const Options& opt, std::ostream& out, std::ostream& err) {
    Series s = Series::zero(0);
    try {
        s = resolve_target(opt.target, opt.order);
    } catch (const qexpr::ExprError& e) {
        err << "error: '" << opt.target << "' is not a named series, and as an expression: "
            << e.what() << "\n";
        return 2;
    }
    if (opt.format == "json") {
        out << s.to_json() << "\n";
    } else if (opt.format == "csv") {
        out << "n,coeff\n";
        for (long n = 0; n <= s.order(); ++n) out << n << "," << s.coeff(n).get_str() << "\n";
    } else {
        for (long n = 0; n <= s.order(); ++n) out << n << "\t" << s.coeff(n).get_str() << "\n";
    }
    return 0;
}

int cmd_oracle(const Options& opt, std::ostream& out, std::ostream& err) {
    PartitionConstraint c = PartitionConstraint::parse(opt.constraint);
    if (opt.oracle_n > 80) {
        err << "error: oracle enumeration for n=" << opt.oracle_n << " is impractical (n <= 80)\n";
        return 2;
    }
    std::vector<Partition> matching;
    long long total = 0;
    for_each_partition(opt.oracle_n, [&](const Partition& p) {
        if (c.matches(p)) {
            ++total;
            if (opt.list_partitions) matching.push_back(p);
        }
        return true;
    });
    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["constraint"] = c.str();
        j["n"] = opt.oracle_n;
        j["count"] = total;
        if (opt.list_partitions) {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& p : matching) arr.push_back(p);
            j["partitions"] = arr;
        }
        out << j.dump() << "\n";
    } else if (opt.format == "csv") {
        out << "constraint,n,count\n" << c.str() << "," << opt.oracle_n << "," << total << "\n";
    } else {
        out << total << "\n";
        for (const auto& p : matching) out << partition_str(p) << "\n";
    }
    return 0;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.oracle_limit > 60 && !opt.force_oracle_limit) {
        err << "error: --oracle-limit above 60 requires --force-oracle-limit\n";
        return 2;
    }
    auto reports = run_check(opt.check_id, opt.order, opt.k_max, opt.oracle_limit);
    return emit_reports(reports, opt.format, out);
}

int cmd_identity(const Options& opt, std::ostream& out, std::ostream&) {
    auto report = qexpr::check_identity(opt.lhs, opt.rhs, opt.order);
    return emit_reports({report}, opt.format, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qslab - exact q-series and partition-identity verification"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
    };

    auto* expand = app.add_subcommand("expand", "print coefficients of a named series or expression");
    expand->add_option("target", opt.target, "registry name or q-expression")->required();
    expand->add_option("--order", opt.order, "truncation order")->check(CLI::Range(0L, 1000000L));
    add_format(expand);

    auto* oracle = app.add_subcommand("oracle", "count partitions under a constraint by enumeration");
    oracle->add_option("constraint", opt.constraint,
                       "constraint, e.g. reg:4 ped de1 deGeq:3 deExact:2 dee deeExact:1 deeGeq:2 reg4gt1")
        ->required();
    oracle->add_option("n", opt.oracle_n, "integer to partition")->required()->check(CLI::Range(0L, 1000000L));
    oracle->add_flag("--list", opt.list_partitions, "print every qualifying partition");
    add_format(oracle);

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("check", opt.check_id, "check id, 'all', or 'oracles'")->capture_default_str();
    verify->add_option("--order", opt.order, "truncation order")->check(CLI::Range(16L, 100000L));
    verify->add_option("--kmax", opt.k_max, "largest multiplicity parameter for T1/T2")
        ->check(CLI::Range(1L, 16L));
    verify->add_option("--oracle-limit", opt.oracle_limit, "enumeration bound for the oracle layer")
        ->check(CLI::Range(0L, 80L));
    verify->add_flag("--force-oracle-limit", opt.force_oracle_limit,
                     "allow an oracle limit above the practical bound of 60");
    add_format(verify);

    auto* identity = app.add_subcommand("identity", "compare two q-expressions coefficient-wise");
    identity->add_option("lhs", opt.lhs, "left expression")->required();
    identity->add_option("rhs", opt.rhs, "right expression")->required();
    identity->add_option("--order", opt.order, "truncation order")->check(CLI::Range(0L, 1000000L));
    add_format(identity);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (expand->parsed()) return cmd_expand(opt, out, err);
        if (oracle->parsed()) return cmd_oracle(opt, out, err);
        if (verify->parsed()) return cmd_verify(opt, out, err);
        if (identity->parsed()) return cmd_identity(opt, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace qslab::cli
