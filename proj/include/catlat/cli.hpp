#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "catlat/json_io.hpp"
#include "catlat/verify.hpp"

namespace catlat {

enum class ObjectKind { spio, tree, perm, path };

inline std::string kind_name(ObjectKind k) {
    switch (k) {
        case ObjectKind::spio: return "spio";
        case ObjectKind::tree: return "tree";
        case ObjectKind::perm: return "perm";
        case ObjectKind::path: return "path";
    }
    return "";
}

inline std::optional<ObjectKind> parse_kind(const std::string& name) {
    if (name == "spio") return ObjectKind::spio;
    if (name == "tree") return ObjectKind::tree;
    if (name == "perm") return ObjectKind::perm;
    if (name == "path") return ObjectKind::path;
    return std::nullopt;
}

/// Syntax-directed kind detection: JSON object, parentheses word, U/D word,
/// or digit/comma word.
inline std::optional<ObjectKind> infer_kind(const std::string& value) {
    if (value.empty()) return std::nullopt;
    if (value.front() == '{') return ObjectKind::spio;
    bool tree = true, path = true, perm = true;
    for (char c : value) {
        if (c != '(' && c != ')') tree = false;
        if (c != 'U' && c != 'D') path = false;
        if (!(c >= '0' && c <= '9') && c != ',') perm = false;
    }
    if (tree) return ObjectKind::tree;
    if (path) return ObjectKind::path;
    if (perm) return ObjectKind::perm;
    return std::nullopt;
}

/// Every object kind converts through the canonical poset form. Loading a
/// poset that does not carry its preorder labelling relabels it and reports
/// the fact, never compares raw labels silently.
struct LoadedObject {
    Spio spio;
    bool relabelled = false;
};

inline LoadedObject load_object(ObjectKind kind, const std::string& text) {
    switch (kind) {
        case ObjectKind::spio: {
            Spio s = spio_from_json(ordered_json::parse(text));
            if (!s.is_canonical()) return {relabel_by_preorder(s), true};
            return {std::move(s), false};
        }
        case ObjectKind::tree:
            return {tree_to_spio(PlanarTree::from_encoding(text)), false};
        case ObjectKind::path:
            return {tree_to_spio(dyck_to_tree(DyckPath(text))), false};
        case ObjectKind::perm:
            return {perm_to_spio(Permutation::parse(text)), false};
    }
    throw std::invalid_argument("load_object: unknown kind");
}

inline std::string render_object(ObjectKind kind, const Spio& s) {
    switch (kind) {
        case ObjectKind::spio: return spio_to_json(s).dump();
        case ObjectKind::tree: return spio_to_tree(s).encoding();
        case ObjectKind::path: return tree_to_dyck(spio_to_tree(s)).steps();
        case ObjectKind::perm: return spio_to_perm(s).to_string();
    }
    throw std::invalid_argument("render_object: unknown kind");
}

namespace cli_detail {

/// Positional values win; otherwise one object per non-empty stdin line.
inline std::vector<std::string> gather_inputs(const std::vector<std::string>& positional,
                                              std::istream& in) {
    if (!positional.empty()) return positional;
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

inline Permutation as_permutation(ObjectKind kind, const std::string& text, std::ostream& err) {
    if (kind == ObjectKind::perm) return Permutation::parse(text);
    const LoadedObject obj = load_object(kind, text);
    if (obj.relabelled) err << "note: input relabelled to its preorder labelling\n";
    return spio_to_perm(obj.spio);
}

/// Strong-order comparison: reduction reachability is the ground truth for
/// small n; beyond that the prefix-maximum characterization serves as the
/// verified fast path whenever both sides avoid 312.
inline bool strong_leq(const Permutation& a, const Permutation& b) {
    if (a.size() <= 6) return leq_strong_bruhat(a, b);
    if (avoids_312(a) && avoids_312(b)) return leq_strong_bruhat_max(a, b);
    return leq_strong_bruhat(a, b);
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"Catalan lattices on series parallel interval orders"};
    app.name("catlat");
    app.require_subcommand(1);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List every object of a Catalan family");
    int enum_n = 0;
    std::string enum_kind = "spio";
    std::string enum_format = "text";
    enumerate_cmd->add_option("--n", enum_n, "Catalan index")->required();
    enumerate_cmd->add_option("--kind", enum_kind, "Object family")
        ->check(CLI::IsMember({"spio", "tree", "perm", "path"}));
    enumerate_cmd->add_option("--format", enum_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* convert_cmd = app.add_subcommand("convert", "Convert objects between families");
    std::string convert_from, convert_to;
    std::vector<std::string> convert_values;
    convert_cmd->add_option("--from", convert_from, "Input kind")
        ->required()
        ->check(CLI::IsMember({"spio", "tree", "perm", "path"}));
    convert_cmd->add_option("--to", convert_to, "Output kind")
        ->required()
        ->check(CLI::IsMember({"spio", "tree", "perm", "path"}));
    convert_cmd->add_option("values", convert_values, "Objects (or one per stdin line)");

    auto* cmp_cmd = app.add_subcommand("cmp", "Compare two objects in one of the four orders");
    std::string cmp_order;
    std::vector<std::string> cmp_values;
    cmp_cmd->add_option("--order", cmp_order, "Order")
        ->required()
        ->check(CLI::IsMember({"dyck", "tamari", "weak", "strong"}));
    cmp_cmd->add_option("values", cmp_values, "Two objects (or two stdin lines)");

    auto* lattice_cmd = app.add_subcommand("lattice", "Meet or join in a Catalan lattice");
    std::string lattice_order, lattice_op;
    std::vector<std::string> lattice_values;
    lattice_cmd->add_option("--order", lattice_order, "Order")
        ->required()
        ->check(CLI::IsMember({"dyck", "tamari"}));
    lattice_cmd->add_option("--op", lattice_op, "Operation")
        ->required()
        ->check(CLI::IsMember({"meet", "join"}));
    lattice_cmd->add_option("values", lattice_values, "Two objects (or two stdin lines)");

    auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of an order at size n");
    std::string hasse_order, hasse_format = "dot";
    int hasse_n = 0;
    hasse_cmd->add_option("--order", hasse_order, "Order")
        ->required()
        ->check(CLI::IsMember({"dyck", "tamari", "weak", "strong"}));
    hasse_cmd->add_option("--n", hasse_n, "Catalan index")->required();
    hasse_cmd->add_option("--format", hasse_format, "Output format")
        ->check(CLI::IsMember({"dot", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "Run every structural claim suite");
    int verify_max_n = 6;
    verify_cmd->add_option("--max-n", verify_max_n, "Largest size to exhaust")
        ->check(CLI::Range(1, 7));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (enumerate_cmd->parsed()) {
            const ObjectKind kind = *parse_kind(enum_kind);
            std::vector<std::string> encodings;
            switch (kind) {
                case ObjectKind::spio:
                    for (const Spio& s : enumerate_spios(enum_n))
                        encodings.push_back(spio_to_json(s).dump());
                    break;
                case ObjectKind::tree:
                    for (const PlanarTree& t : enumerate_trees(enum_n + 1))
                        encodings.push_back(t.encoding());
                    break;
                case ObjectKind::perm:
                    for (const Permutation& p : enumerate_av312(enum_n))
                        encodings.push_back(p.to_string());
                    break;
                case ObjectKind::path:
                    for (const DyckPath& p : enumerate_dyck_paths(enum_n))
                        encodings.push_back(p.steps());
                    break;
            }
            std::sort(encodings.begin(), encodings.end());
            if (enum_format == "text") {
                for (const std::string& e : encodings) out << e << '\n';
            } else {
                ordered_json j;
                j["kind"] = enum_kind;
                j["n"] = enum_n;
                j["count"] = encodings.size();
                ordered_json elems = ordered_json::array();
                for (const std::string& e : encodings) {
                    if (kind == ObjectKind::spio)
                        elems.push_back(ordered_json::parse(e));
                    else
                        elems.push_back(e);
                }
                j["elements"] = std::move(elems);
                out << j.dump(2) << '\n';
            }
            return 0;
        }

        if (convert_cmd->parsed()) {
            const ObjectKind from = *parse_kind(convert_from);
            const ObjectKind to = *parse_kind(convert_to);
            const std::vector<std::string> values = cli_detail::gather_inputs(convert_values, in);
            if (values.empty()) throw std::invalid_argument("convert: no input objects");
            for (const std::string& v : values) {
                const LoadedObject obj = load_object(from, v);
                if (obj.relabelled) err << "note: input relabelled to its preorder labelling\n";
                out << render_object(to, obj.spio) << '\n';
            }
            return 0;
        }

        if (cmp_cmd->parsed()) {
            const std::vector<std::string> values = cli_detail::gather_inputs(cmp_values, in);
            if (values.size() != 2) throw std::invalid_argument("cmp: exactly two objects required");
            const auto k1 = infer_kind(values[0]);
            const auto k2 = infer_kind(values[1]);
            if (!k1 || !k2) throw std::invalid_argument("cmp: unrecognized object syntax");
            if (*k1 != *k2) throw std::invalid_argument("cmp: objects must be of the same kind");
            const CatalanOrder order = *parse_order(cmp_order);
            bool ab = false, ba = false;
            if (order == CatalanOrder::dyck || order == CatalanOrder::tamari) {
                LoadedObject a = load_object(*k1, values[0]);
                LoadedObject b = load_object(*k2, values[1]);
                if (a.relabelled || b.relabelled)
                    err << "note: input relabelled to its preorder labelling\n";
                auto leq = order == CatalanOrder::dyck ? leq_dyck : leq_tamari;
                ab = leq(a.spio, b.spio);
                ba = leq(b.spio, a.spio);
            } else {
                const Permutation a = cli_detail::as_permutation(*k1, values[0], err);
                const Permutation b = cli_detail::as_permutation(*k2, values[1], err);
                if (a.size() != b.size()) throw std::invalid_argument("cmp: sizes differ");
                if (order == CatalanOrder::weak_bruhat) {
                    ab = leq_weak_bruhat(a, b);
                    ba = leq_weak_bruhat(b, a);
                } else {
                    ab = cli_detail::strong_leq(a, b);
                    ba = cli_detail::strong_leq(b, a);
                }
            }
            out << (ab && ba ? "EQ" : ab ? "LT" : ba ? "GT" : "INCOMPARABLE") << '\n';
            return 0;
        }

        if (lattice_cmd->parsed()) {
            const std::vector<std::string> values = cli_detail::gather_inputs(lattice_values, in);
            if (values.size() != 2)
                throw std::invalid_argument("lattice: exactly two objects required");
            const auto k1 = infer_kind(values[0]);
            const auto k2 = infer_kind(values[1]);
            if (!k1 || !k2) throw std::invalid_argument("lattice: unrecognized object syntax");
            if (*k1 != *k2) throw std::invalid_argument("lattice: objects must be of the same kind");
            const CatalanOrder order = *parse_order(lattice_order);
            LoadedObject a = load_object(*k1, values[0]);
            LoadedObject b = load_object(*k2, values[1]);
            if (a.relabelled || b.relabelled)
                err << "note: input relabelled to its preorder labelling\n";
            const Spio result = lattice_op == "meet" ? lattice_meet(order, a.spio, b.spio)
                                                     : lattice_join(order, a.spio, b.spio);
            out << render_object(*k1, result) << '\n';
            return 0;
        }

        if (hasse_cmd->parsed()) {
            const HasseDiagram h = hasse(*parse_order(hasse_order), hasse_n);
            if (hasse_format == "dot")
                out << h.to_dot();
            else
                out << hasse_to_json(h).dump(2) << '\n';
            return 0;
        }

        if (verify_cmd->parsed()) {
            const std::vector<verify::ClaimResult> results = verify::run_all(verify_max_n);
            int passed = 0;
            for (const verify::ClaimResult& r : results) {
                out << r.id << ' ' << r.range << ": " << r.detail << " -- "
                    << (r.pass ? "PASS" : "FAIL") << '\n';
                if (r.pass) ++passed;
            }
            out << passed << '/' << results.size() << " claims passed\n";
            return passed == static_cast<int>(results.size()) ? 0 : 3;
        }
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        err << "verification failure: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

}  // namespace catlat
