#include "qaff/cli.hpp"

#include <algorithm>
#include <fstream>

#include "CLI11.hpp"
#include "qaff/qchar.hpp"
#include "qaff/sl2engine.hpp"
#include "qaff/sl2theory.hpp"

namespace qaff {

namespace {

struct Options {
    std::string type_label = "A1^1";
    std::string monomial;
    std::string monomials;
    std::string ref;
    std::string table_path;
    std::string out_path;
    std::string mode = "geq";
    long long level = 0;
    long long ell = 4;
    int maxk = 2;
    int tuples = 3;
    int copies = 3;
    int node = 1;
    int kappa = 0;
    std::string lambda = "0";
    unsigned long long seed = 1;
    size_t samples = 20;
    bool alt = false;
    bool json_errors = false;
};

Rat parse_rat_arg(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw domain_error("cannot parse rational '" + s + "'");
    }
}

// list grammar: ';' separates monomials, '*' separates factors inside one
std::vector<Monomial> parse_monomial_list(const std::string& text) {
    std::vector<Monomial> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t semi = text.find(';', pos);
        std::string item = text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        if (!item.empty()) out.push_back(parse_monomial(item));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (out.empty()) throw domain_error("empty monomial list");
    return out;
}

void emit(const Options& opt, std::ostream& out, const Json& payload) {
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        if (!f) throw domain_error("cannot open '" + opt.out_path + "' for writing");
        f << payload.dump(2) << "\n";
        Json note;
        note["written"] = opt.out_path;
        out << note.dump(2) << "\n";
        return;
    }
    out << payload.dump(2) << "\n";
}

Json strings_json(const std::vector<KRString>& strings) {
    Json arr = Json::array();
    for (const KRString& s : strings) arr.push_back({{"base", s.base}, {"length", s.length}});
    return arr;
}

void require_sl2_type(const Options& opt) {
    if (parse_affine_type(opt.type_label) != AffineType{'A', 1, 1})
        throw domain_error("this command is specific to type A1^1");
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"exact q-character computations for quantum affine algebras"};
    app.name("qchar");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", opt.json_errors, "emit machine-readable error JSON on stdout");

    auto add_type = [&](CLI::App* cmd) {
        cmd->add_option("--type", opt.type_label, "affine type label (default A1^1)");
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", opt.out_path, "write the payload to this file");
    };

    std::function<Json()> action;

    CLI::App* sl2 = app.add_subcommand("sl2", "rank-one computations");
    sl2->require_subcommand(1);

    CLI::App* sl2_char = sl2->add_subcommand("char", "simple character of a dominant monomial");
    sl2_char->add_option("--monomial", opt.monomial, "dominant monomial literal")->required();
    add_type(sl2_char);
    add_out(sl2_char);
    sl2_char->callback([&] {
        action = [&] {
            require_sl2_type(opt);
            return character_to_json(chi_simple_sl2(parse_monomial(opt.monomial)));
        };
    });

    CLI::App* sl2_tensor = sl2->add_subcommand("tensor-char", "character of a tensor product");
    sl2_tensor->add_option("--monomials", opt.monomials, "';'-separated dominant monomials ('*' joins factors)")
        ->required();
    add_type(sl2_tensor);
    add_out(sl2_tensor);
    sl2_tensor->callback([&] {
        action = [&] {
            require_sl2_type(opt);
            const CartanData& cd = sl2_cartan();
            QCharacter c = QCharacter::unit();
            for (const Monomial& m : parse_monomial_list(opt.monomials))
                c = char_mul(cd, c, chi_simple_sl2(m));
            return character_to_json(c);
        };
    });

    CLI::App* sl2_simple = sl2->add_subcommand("simple", "is the tensor product of simples simple?");
    sl2_simple->add_option("--monomials", opt.monomials, "';'-separated dominant monomials ('*' joins factors)")
        ->required();
    add_type(sl2_simple);
    add_out(sl2_simple);
    sl2_simple->callback([&] {
        action = [&] {
            require_sl2_type(opt);
            Json j;
            j["simple"] = tensor_simple_sl2(parse_monomial_list(opt.monomials));
            return j;
        };
    });

    CLI::App* sl2_factor = sl2->add_subcommand("factor", "segment factorization of a dominant monomial");
    sl2_factor->add_option("--monomial", opt.monomial)->required();
    add_type(sl2_factor);
    add_out(sl2_factor);
    sl2_factor->callback([&] {
        action = [&] {
            require_sl2_type(opt);
            Json j;
            j["strings"] = strings_json(factor_into_strings(parse_monomial(opt.monomial)).strings);
            return j;
        };
    });

    CLI::App* sl2_realize = sl2->add_subcommand("realize", "matrix realization of a simple module");
    sl2_realize->add_option("--monomial", opt.monomial)->required();
    add_type(sl2_realize);
    add_out(sl2_realize);
    sl2_realize->callback([&] {
        action = [&] {
            require_sl2_type(opt);
            Rep r = realize_simple(parse_monomial(opt.monomial));
            Json j = rep_to_json(r);
            j["character"] = character_to_json(extract_qchar(r));
            return j;
        };
    });

    CLI::App* amono = app.add_subcommand("amonomial", "root-analog monomial at a lattice position");
    amono->add_option("--node", opt.node)->required();
    amono->add_option("--kappa", opt.kappa);
    amono->add_option("--lambda", opt.lambda, "rational exponent of q, e.g. 3 or -1/2");
    add_type(amono);
    add_out(amono);
    amono->callback([&] {
        action = [&] {
            CartanData cd = build_cartan(opt.type_label);
            APosition pos{opt.node, SpectralPoint{opt.kappa, parse_rat_arg(opt.lambda)}};
            Monomial a = a_monomial(cd, pos);
            Json j;
            j["position"] = to_string(pos);
            j["monomial"] = monomial_to_json(a);
            j["text"] = to_string(a);
            return j;
        };
    });

    CLI::App* trunc = app.add_subcommand("trunc", "truncated character of a rank-one simple");
    trunc->add_option("--monomial", opt.monomial)->required();
    trunc->add_option("--level", opt.level)->required();
    trunc->add_option("--mode", opt.mode, "geq or leq (default geq)");
    trunc->add_flag("--alt", opt.alt, "use the A-window filter");
    add_type(trunc);
    add_out(trunc);
    trunc->callback([&] {
        action = [&] {
            require_sl2_type(opt);
            const CartanData& cd = sl2_cartan();
            QCharacter c = chi_simple_sl2(parse_monomial(opt.monomial));
            QCharacter t;
            if (opt.mode == "geq")
                t = opt.alt ? char_trunc_geq_alt(cd, c, opt.level) : char_trunc_geq(cd, c, opt.level);
            else if (opt.mode == "leq")
                t = opt.alt ? char_trunc_leq_alt(cd, c, opt.level) : char_trunc_leq(cd, c, opt.level);
            else
                throw domain_error("--mode must be geq or leq");
            return character_to_json(t);
        };
    });

    CLI::App* dec = app.add_subcommand("decompose", "ratio of monomials as root-monomial inverses");
    dec->add_option("--monomial", opt.monomial)->required();
    dec->add_option("--ref", opt.ref, "reference monomial")->required();
    add_type(dec);
    add_out(dec);
    dec->callback([&] {
        action = [&] {
            CartanData cd = build_cartan(opt.type_label);
            auto positions = decompose_over_A(cd, parse_monomial(opt.monomial), parse_monomial(opt.ref));
            Json j;
            j["decomposable"] = positions.has_value();
            if (positions) {
                Json arr = Json::array();
                for (const APosition& p : *positions) arr.push_back(to_string(p));
                j["positions"] = arr;
            }
            return j;
        };
    });

    CLI::App* dual = app.add_subcommand("dual", "highest monomial of the dual simple module");
    dual->add_option("--monomial", opt.monomial)->required();
    add_type(dual);
    add_out(dual);
    dual->callback([&] {
        action = [&] {
            CartanData cd = build_cartan(opt.type_label);
            Monomial d = dual_highest_monomial(cd, parse_monomial(opt.monomial));
            Json j;
            j["monomial"] = monomial_to_json(d);
            j["text"] = to_string(d);
            return j;
        };
    });

    CLI::App* bar = app.add_subcommand("bar", "level reflection of a monomial in [0, ell]");
    bar->add_option("--monomial", opt.monomial)->required();
    bar->add_option("--ell", opt.ell)->required();
    add_type(bar);
    add_out(bar);
    bar->callback([&] {
        action = [&] {
            CartanData cd = build_cartan(opt.type_label);
            Monomial b = bar_monomial(cd, parse_monomial(opt.monomial), opt.ell);
            Json j;
            j["monomial"] = monomial_to_json(b);
            j["text"] = to_string(b);
            return j;
        };
    });

    CLI::App* verify = app.add_subcommand("verify", "window verification suites");
    verify->require_subcommand(1);
    auto add_window = [&](CLI::App* cmd) {
        cmd->add_option("--ell", opt.ell, "level window bound");
        cmd->add_option("--maxk", opt.maxk, "maximal segment length");
        add_out(cmd);
    };

    CLI::App* v_factg = verify->add_subcommand("factg", "pairwise vs global simplicity");
    add_window(v_factg);
    v_factg->add_option("--tuples", opt.tuples, "maximal tuple size");
    v_factg->add_option("--samples", opt.samples, "matrix-oracle confirmations");
    v_factg->add_option("--seed", opt.seed, "sampling seed");
    v_factg->callback([&] {
        action = [&] {
            return verify_pairwise_global(opt.ell, opt.maxk, opt.tuples, opt.samples, opt.seed)
                .to_json();
        };
    });

    CLI::App* v_useqt2 = verify->add_subcommand("useqt2", "truncation factorization identity");
    add_window(v_useqt2);
    v_useqt2->callback([&] {
        action = [&] { return verify_trunc_factorization(opt.ell, opt.maxk).to_json(); };
    });

    CLI::App* v_alt = verify->add_subcommand("alternate", "agreement of the two truncation filters");
    add_window(v_alt);
    v_alt->callback([&] {
        action = [&] { return verify_trunc_agreement(opt.ell, opt.maxk).to_json(); };
    });

    CLI::App* v_dual = verify->add_subcommand("duality", "termwise inversion against dual characters");
    add_window(v_dual);
    v_dual->callback([&] {
        action = [&] { return verify_duality(opt.ell, opt.maxk).to_json(); };
    });

    CLI::App* v_zeta = verify->add_subcommand("zeta", "character-level window reflection");
    add_window(v_zeta);
    v_zeta->callback([&] {
        action = [&] { return verify_reflection(opt.ell, opt.maxk).to_json(); };
    });

    CLI::App* v_lzero = verify->add_subcommand("lzero", "level-zero tuples are simple");
    v_lzero->add_option("--copies", opt.copies, "maximal power of the level-zero variable");
    v_lzero->add_option("--tuples", opt.tuples, "maximal tuple size");
    add_out(v_lzero);
    v_lzero->callback([&] {
        action = [&] { return verify_level_zero(opt.copies, opt.tuples).to_json(); };
    });

    CLI::App* table = app.add_subcommand("table", "character table persistence");
    table->require_subcommand(1);

    CLI::App* t_save = table->add_subcommand("save", "compute a rank-one window table and save it");
    t_save->add_option("--out", opt.out_path, "destination path")->required();
    t_save->add_option("--ell", opt.ell);
    t_save->add_option("--maxk", opt.maxk);
    add_type(t_save);
    t_save->callback([&] {
        action = [&] {
            require_sl2_type(opt);
            CharacterTable t;
            t.type_label = "A1^1";
            for (const Monomial& m : window_simples(opt.ell, opt.maxk))
                t.entries[m] = TableEntry{chi_simple_sl2(m), "computed-sl2"};
            save_table(t, opt.out_path);
            Json j;
            j["written"] = opt.out_path;
            j["entries"] = t.entries.size();
            opt.out_path.clear();   // summary goes to stdout
            return j;
        };
    });

    CLI::App* t_load = table->add_subcommand("load", "load and validate a character table");
    t_load->add_option("--table", opt.table_path, "table path")->required();
    add_type(t_load);
    add_out(t_load);
    t_load->callback([&] {
        action = [&] {
            CartanData cd = build_cartan(opt.type_label);
            CharacterTable t = load_table(cd, opt.table_path);
            Json j;
            j["type"] = t.type_label;
            j["entries"] = t.entries.size();
            Json keys = Json::array();
            for (const auto& [m, e] : t.entries) keys.push_back(to_string(m));
            j["keys"] = keys;
            return j;
        };
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        err << "verbs: sl2 {char,tensor-char,simple,factor,realize}, amonomial, trunc, decompose, "
               "dual, bar, verify {factg,useqt2,alternate,duality,zeta,lzero}, table {load,save}\n";
        return 2;
    }

    try {
        if (!action) throw std::logic_error("no action bound");
        Json payload = action();
        emit(opt, out, payload);
        return 0;
    } catch (const domain_error& e) {
        if (opt.json_errors) {
            Json j;
            j["error"] = e.what();
            out << j.dump(2) << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return 1;
    }
}

} // namespace qaff
