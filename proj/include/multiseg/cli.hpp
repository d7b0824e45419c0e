#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "multiseg/multiseg.hpp"

namespace mseg::cli {

inline constexpr const char* kVersion = "1.0.0";

enum Exit : int { Ok = 0, Internal = 1, BadInput = 2, BadDomain = 3, TooLarge = 4 };

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/// Hash of the reference computations; changes iff one of them changes.
inline std::string golden_hash() {
    const Multisegment a{{1, 1}, {2, 2}, {2, 2}, {3, 3}}, b{{1, 2}, {2, 3}};
    const auto d = symmetrize(a);
    json g;
    g["mult"] = mult(b, a);
    g["ordinary"] = to_json(d.ordinary);
    g["symmetric"] = to_json(d.symmetric);
    g["c1"] = to_json(d.c1);
    g["c2"] = to_json(d.c2);
    g["c3"] = to_json(d.c3);
    g["lift"] = to_json(lift_stepwise(d, b));
    g["kl"] = kl_polynomial(Permutation::parse("1324"), Permutation::parse("3412"));
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(g.dump());
    return os.str();
}

inline json poset_json(const MultisegmentPoset& p) {
    json elems = json::array(), covers = json::array();
    for (const auto& e : p.elements) elems.push_back(to_json(e));
    for (auto [u, v] : hasse_edges(p)) covers.push_back({u, v});
    return {{"size", p.size()}, {"elements", elems}, {"covers", covers}};
}

inline json list_json(const std::vector<Multisegment>& v) {
    json arr = json::array();
    for (const auto& m : v) arr.push_back(to_json(m));
    return arr;
}

inline Side parse_side(const std::string& s) {
    if (s == "end") return Side::End;
    if (s == "begin") return Side::Begin;
    throw ParseError("side must be 'end' or 'begin', got '" + s + "'");
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write " + path);
    f << text;
}

}  // namespace detail

/// Runs one command line (without the program name). Output goes to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multisegment calculus: posets, truncations, symmetrization, multiplicities"};
    app.require_subcommand(0, 1);
    bool version = false;
    app.add_flag("--version", version, "Print version and golden-corpus hash");

    std::string a_path, b_path, dot_path, json_path, side_str = "end", path_path, x_str, w_str, of_path;
    std::size_t max_size = kDefaultPosetCap;
    std::optional<int> k_end, k_begin, k_opt;

    auto* poset = app.add_subcommand("poset", "Enumerate S(a) with its Hasse diagram");
    poset->add_option("a", a_path, "multisegment JSON")->required();
    poset->add_option("--dot", dot_path, "write DOT here ('-' for stdout)");
    poset->add_option("--max-size", max_size, "element cap");

    auto* trunc = app.add_subcommand("truncate", "a^(k), ^(k)a, or a path of truncations");
    trunc->add_option("a", a_path)->required();
    auto* o_end = trunc->add_option("--end", k_end);
    auto* o_begin = trunc->add_option("--begin", k_begin);
    auto* o_path = trunc->add_option("--path", path_path, "multisegment JSON indexing the path");
    trunc->add_option("--side", side_str, "side for --path: end|begin");
    o_end->excludes(o_begin)->excludes(o_path);
    o_begin->excludes(o_path);

    auto* dset = app.add_subcommand("descent-set", "S(a)_k");
    dset->add_option("a", a_path)->required();
    dset->add_option("-k", k_opt)->required();
    dset->add_option("--side", side_str);
    dset->add_option("--max-size", max_size);

    auto* sym = app.add_subcommand("symmetrize", "a -> (a^sym, c1, c2, c3)");
    sym->add_option("a", a_path)->required();

    auto* lft = app.add_subcommand("lift", "b -> b^sym for b in S(a)");
    lft->add_option("a", a_path)->required();
    lft->add_option("b", b_path)->required();

    auto* ph = app.add_subcommand("phi", "Phi(w) over a symmetric base, or its inverse");
    ph->add_option("base", a_path)->required();
    auto* o_w = ph->add_option("--w", w_str, "permutation, e.g. 1324");
    auto* o_of = ph->add_option("--of", of_path, "multisegment JSON to invert");
    o_w->excludes(o_of);

    auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,w}");
    kl->add_option("--x", x_str)->required();
    kl->add_option("--w", w_str)->required();

    auto* ml = app.add_subcommand("mult", "m(b,a)");
    ml->add_option("b", b_path)->required();
    ml->add_option("a", a_path)->required();

    auto* mm = app.add_subcommand("mult-matrix", "m(b,a) for all b in S(a)");
    mm->add_option("a", a_path)->required();
    mm->add_option("--json", json_path, "write here instead of stdout");
    mm->add_option("--max-size", max_size);

    auto* rt = app.add_subcommand("relation-type", "Same relation type test and the induced maps");
    rt->add_option("a", a_path)->required();
    rt->add_option("a2", b_path)->required();

    auto* ring = app.add_subcommand("ring", "Ring operations on {basis, terms} expressions");
    ring->require_subcommand(1);
    auto* derive = ring->add_subcommand("derive", "partial derivative (pi basis)");
    derive->add_option("expr", a_path)->required();
    auto* d_end = derive->add_option("--end", k_end);
    auto* d_begin = derive->add_option("--begin", k_begin);
    d_end->excludes(d_begin);
    auto* to_l = ring->add_subcommand("to-l", "convert to the L basis");
    to_l->add_option("expr", a_path)->required();
    auto* to_pi = ring->add_subcommand("to-pi", "convert to the pi basis");
    to_pi->add_option("expr", a_path)->required();

    std::vector<std::string> argv_store{"multiseg"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return BadInput;
    }

    try {
        if (version) {
            out << "multiseg " << kVersion << " golden " << detail::golden_hash() << "\n";
            return Ok;
        }
        if (*poset) {
            auto p = generate_poset(read_multisegment(a_path), max_size);
            if (dot_path == "-") {
                out << hasse_dot(p);
                return Ok;
            }
            if (!dot_path.empty()) detail::write_file(dot_path, hasse_dot(p));
            out << detail::poset_json(p).dump() << "\n";
        } else if (*trunc) {
            auto a = read_multisegment(a_path);
            Multisegment r;
            if (k_end)
                r = truncate_end(a, *k_end);
            else if (k_begin)
                r = truncate_begin(a, *k_begin);
            else if (!path_path.empty())
                r = truncate_path(a, DescentPath::of_multisegment(read_multisegment(path_path),
                                                                  detail::parse_side(side_str)));
            else
                throw ParseError("truncate needs --end, --begin or --path");
            out << to_json(r).dump() << "\n";
        } else if (*dset) {
            auto a = read_multisegment(a_path);
            out << json{{"elements", detail::list_json(descent_set(a, *k_opt, detail::parse_side(side_str), max_size))}}
                       .dump()
                << "\n";
        } else if (*sym) {
            auto d = symmetrize(read_multisegment(a_path));
            json j{{"original", to_json(d.original)}, {"ordinary", to_json(d.ordinary)},
                   {"symmetric", to_json(d.symmetric)}, {"c1", to_json(d.c1)},
                   {"c2", to_json(d.c2)},             {"c3", to_json(d.c3)}};
            out << j.dump() << "\n";
        } else if (*lft) {
            auto d = symmetrize(read_multisegment(a_path));
            out << to_json(lift_stepwise(d, read_multisegment(b_path))).dump() << "\n";
        } else if (*ph) {
            auto base = read_multisegment(a_path);
            if (!w_str.empty())
                out << to_json(phi(base, Permutation::parse(w_str))).dump() << "\n";
            else if (!of_path.empty())
                out << json(phi_inverse(base, read_multisegment(of_path)).one_line()).dump() << "\n";
            else
                throw ParseError("phi needs --w or --of");
        } else if (*kl) {
            auto x = Permutation::parse(x_str), w = Permutation::parse(w_str);
            out << json(kl_polynomial(x, w)).dump() << "\n";
        } else if (*ml) {
            out << mult(read_multisegment(b_path), read_multisegment(a_path)) << "\n";
        } else if (*mm) {
            auto m = mult_matrix(read_multisegment(a_path), max_size);
            json arr = json::array();
            for (const auto& [b, v] : *m) arr.push_back({{"multisegment", to_json(b)}, {"m", v}});
            if (json_path.empty())
                out << arr.dump() << "\n";
            else
                detail::write_file(json_path, arr.dump() + "\n");
        } else if (*rt) {
            auto a = read_multisegment(a_path), a2 = read_multisegment(b_path);
            auto m = same_relation_type(a, a2);
            json j{{"same", m.has_value()}};
            if (m) {
                json bm = json::array(), em = json::array();
                for (auto [x, y] : m->begin_map) bm.push_back({x, y});
                for (auto [x, y] : m->end_map) em.push_back({x, y});
                j["begin_map"] = bm;
                j["end_map"] = em;
            }
            out << j.dump() << "\n";
        } else if (*ring) {
            auto x = ring_element_from_json(read_json_file(a_path));
            RingElement r;
            if (*derive) {
                if (k_end)
                    r = derivative_end(x, *k_end);
                else if (k_begin)
                    r = derivative_begin(x, *k_begin);
                else
                    throw ParseError("ring derive needs --end or --begin");
            } else if (*to_l) {
                r = to_L_basis(x);
            } else {
                r = to_pi_basis(x);
            }
            out << to_json(r).dump() << "\n";
        } else {
            out << app.help();
        }
        return Ok;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return BadInput;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return BadDomain;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return TooLarge;
    } catch (const json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return BadInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return Internal;
    }
}

}  // namespace mseg::cli
