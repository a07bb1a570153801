#include "decklab/cli.hpp"

#include "decklab/errors.hpp"
#include "decklab/polynomial_parser.hpp"
#include "decklab/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

namespace decklab {

namespace {

struct Options
{
    std::string command;
    std::string groupoid;
    std::string field;
    std::vector<std::string> multisets;
    std::string function;
    std::string poly;
    std::string tuple;
    std::string suite = "weak";
    std::string pattern;
    int n = 0;
    int max_order = 0;
    std::uint64_t cap = 0;
    std::uint64_t seed = 1;
    std::uint64_t samples = 10'000;
    std::uint64_t limit = 0;
    std::string format = "json";
    int workers = 1;
    bool omit_timing = false;
    bool iso = false;
    bool random = false;
    bool some = false;
    bool example1 = false;
    bool distinct = false;
};

std::uint64_t enumeration_cap(const Options& o)
{
    if (o.cap > 0)
        return o.cap;
    if (const char* env = std::getenv("DECKLAB_CAP")) {
        try {
            const auto v = std::stoull(env);
            if (v > 0)
                return v;
        } catch (const std::exception&) {
        }
        throw PreconditionViolated("DECKLAB_CAP must be a positive integer");
    }
    return 0;
}

SweepConfig sweep_config(const Options& o)
{
    SweepConfig cfg;
    cfg.workers = o.workers;
    cfg.seed = o.seed;
    cfg.samples = o.samples;
    if (const auto cap = enumeration_cap(o))
        cfg.exhaustive_cap = cap;
    return cfg;
}

std::uint64_t multiset_cap(const Options& o)
{
    const auto cap = enumeration_cap(o);
    return cap ? cap : kDefaultEnumerationCap;
}

void require(bool cond, const std::string& what)
{
    if (!cond)
        throw PreconditionViolated(what);
}

Structure structure_of(const Options& o)
{
    require(!o.groupoid.empty(), "--groupoid is required");
    return load_structure(o.groupoid);
}

std::vector<Multiset> multisets_of(const Options& o, const Structure& s, std::size_t count)
{
    require(o.multisets.size() == count,
            "expected " + std::to_string(count) + " --multiset argument(s)");
    std::vector<Multiset> out;
    for (const auto& text : o.multisets)
        out.push_back(parse_multiset(text, s.groupoid.order()));
    return out;
}

std::vector<Element> parse_tuple(const std::string& text)
{
    std::vector<Element> out;
    std::stringstream ss(text);
    std::string item;
    std::size_t column = 1;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos)
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("bad tuple entry \"" + item + "\"", 1, column);
        }
        column += item.size() + 1;
    }
    return out;
}

// The function given by --function or --poly (which needs --field).
std::optional<FiniteFunction> function_of(const Options& o, const std::optional<FiniteField>& field)
{
    if (!o.function.empty())
        return load_function(o.function);
    if (!o.poly.empty()) {
        require(field.has_value(), "--poly needs --field");
        return compile_polynomial(o.poly, *field, o.n);
    }
    return std::nullopt;
}

std::optional<FiniteField> field_of(const Options& o)
{
    if (o.field.empty())
        return std::nullopt;
    return parse_field(o.field);
}

Json config_json(const Options& o)
{
    Json c = Json::object();
    if (!o.groupoid.empty())
        c["groupoid"] = o.groupoid;
    if (!o.field.empty())
        c["field"] = o.field;
    if (!o.multisets.empty())
        c["multisets"] = o.multisets;
    if (!o.function.empty())
        c["function"] = o.function;
    if (!o.poly.empty())
        c["poly"] = o.poly;
    if (!o.tuple.empty())
        c["tuple"] = o.tuple;
    if (o.command == "verify-affine")
        c["suite"] = o.suite;
    if (!o.pattern.empty())
        c["pattern"] = o.pattern;
    if (o.n)
        c["n"] = o.n;
    if (o.max_order)
        c["max_order"] = o.max_order;
    if (const auto cap = enumeration_cap(o))
        c["cap"] = cap;
    c["samples"] = o.samples;
    if (o.limit)
        c["limit"] = o.limit;
    for (const auto& [flag, on] : {std::pair{"iso", o.iso}, {"random", o.random}, {"some", o.some},
                                   {"example1", o.example1}, {"distinct", o.distinct}})
        if (on)
            c[flag] = true;
    return c;
}

struct Outcome
{
    Outcome() = default;
    Outcome(Json r, bool f = false) : report(std::move(r)), falsified(f) {}

    Json report;
    bool falsified = false;
    /// Extra JSON lines emitted before the report.
    std::vector<Json> stream;
};

Outcome cmd_deck(const Options& o)
{
    const auto field = field_of(o);
    if (auto f = function_of(o, field)) {
        Json j{{"function", to_json(*f)}, {"deck", to_json(function_deck(*f))}};
        return {std::move(j)};
    }
    const Structure s = structure_of(o);
    const Multiset m = multisets_of(o, s, 1).front();
    Json j{{"structure", s.name},
           {"multiset", to_json(m)},
           {"deck", to_json(cards(s.groupoid, m))},
           {"stats", to_json(deck_stats(s.groupoid, m))}};
    return {std::move(j)};
}

Outcome cmd_check(const Options& o)
{
    const auto field = field_of(o);
    if (auto f = function_of(o, field)) {
        require(field.has_value(), "affinity checks need --field");
        const auto aff = is_affine(*field, *f);
        Json j{{"field", field->name()}, {"function", to_json(*f)}, {"affine", aff.has_value()}};
        if (aff)
            j["affine_form"] = to_json(*aff);
        j["polynomial"] = to_json(canonical_polynomial(*field, *f));
        return {std::move(j)};
    }
    const Structure s = structure_of(o);
    const Multiset m = multisets_of(o, s, 1).front();
    Json j{{"structure", s.name}, {"multiset", to_json(m)}};
    j.update(to_json(is_reconstructible(s.groupoid, m, multiset_cap(o))));
    return {std::move(j)};
}

Outcome cmd_classify(const Options& o)
{
    const Structure s = structure_of(o);
    const auto ms = multisets_of(o, s, 2);
    Json j{{"structure", s.name},
           {"first", to_json(ms[0])},
           {"second", to_json(ms[1])},
           {"tags", to_json(classify_pair(s.groupoid, ms[0], ms[1]))}};
    return {std::move(j)};
}

Outcome cmd_search(const Options& o)
{
    if (o.example1) {
        const int max_order = o.max_order ? o.max_order : 5;
        const auto w = search_example1_witness(max_order, o.distinct);
        Json j{{"max_order", max_order}, {"distinct_rst", o.distinct}, {"found", w.has_value()}};
        if (w)
            j["witness"] = to_json(*w);
        return {std::move(j)};
    }
    if (!o.tuple.empty()) {
        const Structure s = structure_of(o);
        const auto tuple = parse_tuple(o.tuple);
        const auto inst = group_two_card_ambiguity(s.groupoid, tuple);
        Json j{{"structure", s.name}, {"tuple", tuple}};
        j.update(to_json(inst));
        return {std::move(j), !inst.shared};
    }
    require(o.n >= 2, "--n >= 2 is required");
    require(o.max_order >= 1, "--max-order >= 1 is required");
    SearchOptions opts;
    if (!o.pattern.empty()) {
        opts.filter = pattern_from_name(o.pattern);
        require(opts.filter.has_value(), "unknown pattern " + o.pattern);
    }
    opts.isomorphism_filter = o.iso;
    opts.randomized = o.random;
    opts.samples = o.samples;
    opts.seed = o.seed;
    opts.workers = o.workers;
    opts.multiset_cap = multiset_cap(o);
    std::uint64_t remaining = o.limit ? o.limit : UINT64_MAX;
    Outcome out;
    std::uint64_t found = 0;
    for (int order = 1; order <= o.max_order && remaining > 0; ++order) {
        opts.limit = remaining;
        for (const auto& c : search_counterexamples(order, o.n, opts)) {
            out.stream.push_back(to_json(c));
            ++found;
            --remaining;
        }
    }
    out.report = Json{{"n", o.n}, {"max_order", o.max_order}, {"counterexamples", found}};
    return out;
}

Outcome cmd_verify_theorem(const Options& o)
{
    require(o.n >= 2, "--n >= 2 is required");
    if (!o.groupoid.empty()) {
        const Structure s = structure_of(o);
        const auto r = verify_theorem(s.groupoid, o.n, multiset_cap(o));
        return {to_json(r), r.falsified};
    }
    require(o.max_order >= 1, "--max-order >= 1 (or --groupoid) is required");
    SweepOptions opts;
    opts.workers = o.workers;
    opts.multiset_cap = multiset_cap(o);
    if (const auto cap = enumeration_cap(o))
        opts.table_cap = cap;
    const auto r = verify_theorem_sweep(o.max_order, o.n, opts);
    return {to_json(r), r.falsified};
}

Outcome cmd_verify_affine(const Options& o)
{
    const SweepConfig cfg = sweep_config(o);
    const auto field = field_of(o);
    if (o.suite == "weak") {
        require(o.n >= 2, "--n >= 2 is required");
        std::shared_ptr<const RightSemiring> ring;
        std::string name;
        if (field) {
            ring = field->semiring_ptr();
            name = field->name();
        } else {
            const Structure s = structure_of(o);
            require(s.semiring != nullptr, "structure " + s.name + " declares no multiplication");
            ring = s.semiring;
            name = s.name;
        }
        const auto r = verify_weak_reconstructibility(ring, o.n, cfg);
        Json j{{"suite", "weak"}, {"structure", name}};
        j.update(to_json(r));
        return {std::move(j), r.falsified};
    }
    if (o.suite == "recognizability") {
        require(field.has_value(), "--field is required");
        require(o.n >= 2, "--n >= 2 is required");
        const auto r = verify_recognizability(*field, o.n, cfg);
        Json j{{"suite", "recognizability"}};
        j.update(to_json(r));
        return {std::move(j), r.falsified};
    }
    if (o.suite == "willard") {
        require(field.has_value(), "--field is required");
        require(o.n >= 2, "--n >= 2 is required");
        const auto r = willard_sweep(field->q(), o.n, cfg);
        Json j{{"suite", "willard"}};
        j.update(to_json(r));
        return {std::move(j), r.falsified};
    }
    if (o.suite == "bridge") {
        std::vector<FiniteField> fields;
        if (field)
            fields.push_back(*field);
        else
            fields = {make_gf(2, 1), make_gf(3, 1), make_gf(2, 2)};
        const int max_arity = o.n ? o.n : 5;
        const auto r = verify_bridge(fields, 2, max_arity, o.samples, cfg);
        Json names = Json::array();
        for (const auto& f : fields)
            names.push_back(f.name());
        Json j{{"suite", "bridge"}, {"fields", std::move(names)}, {"min_arity", 2}, {"max_arity", max_arity}};
        j.update(to_json(r));
        return {std::move(j), r.falsified};
    }
    if (o.suite == "function") {
        require(field.has_value(), "--field is required");
        const auto f = function_of(o, field);
        require(f.has_value(), "--poly or --function is required");
        const auto aff = is_affine(*field, *f);
        Json j{{"suite", "function"}, {"field", field->name()}, {"affine", aff.has_value()}};
        j["polynomial"] = to_json(canonical_polynomial(*field, *f));
        bool falsified = false;
        if (aff) {
            j["affine_form"] = to_json(*aff);
            if (aff->arity() >= 2) {
                const auto d = affine_deck(*aff);
                j["affine_deck"] = to_json(d);
                falsified = !d.coherent;
            }
        }
        return {std::move(j), falsified};
    }
    throw PreconditionViolated("unknown suite " + o.suite +
                               " (weak, recognizability, willard, bridge, function)");
}

Outcome cmd_min_cards(const Options& o)
{
    const Structure s = structure_of(o);
    require(o.n >= 2, "--n >= 2 is required");
    const auto r = min_determining_cards(s.groupoid, o.n, multiset_cap(o), o.some);
    Json j{{"structure", s.name}};
    j.update(to_json(r));
    return {std::move(j)};
}

Outcome cmd_gf(const Options& o)
{
    const auto field = field_of(o);
    require(field.has_value(), "--field is required");
    return {to_json(*field)};
}

void emit(const Json& j, const Options& o, std::ostream& out, bool compact)
{
    if (o.format == "text")
        out << to_text(j);
    else
        out << (compact ? j.dump() : j.dump(2)) << '\n';
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Decks of multisets over finite commutative groupoids and of affine functions"};
    app.name(kToolName);
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--groupoid", o.groupoid, "structure file or alias (zN, gfQ, latticeN)");
    app.add_option("--field", o.field, "finite field as p_k, gfQ, or Q");
    app.add_option("--multiset", o.multisets, "multiset such as \"<0,1,1>\" (repeatable)");
    app.add_option("--function", o.function, "function file");
    app.add_option("--poly", o.poly, "polynomial expression over --field");
    app.add_option("--tuple", o.tuple, "comma separated tuple for the two-card construction");
    app.add_option("--suite", o.suite, "verify-affine suite")
        ->check(CLI::IsMember({"weak", "recognizability", "willard", "bridge", "function"}));
    app.add_option("--pattern", o.pattern, "search filter, e.g. THM4_II");
    app.add_option("--n", o.n, "cardinality or arity")->check(CLI::NonNegativeNumber);
    app.add_option("--max-order", o.max_order, "largest groupoid order")->check(CLI::NonNegativeNumber);
    app.add_option("--cap", o.cap, "enumeration cap")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--samples", o.samples, "random samples / bridge functions");
    app.add_option("--limit", o.limit, "largest number of counterexamples");
    app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--omit-timing", o.omit_timing, "leave elapsed_ms out of reports");
    app.add_flag("--iso", o.iso, "skip tables isomorphic to an earlier one");
    app.add_flag("--random", o.random, "sample tables instead of enumerating");
    app.add_flag("--some", o.some, "also compute the some-m card count");
    app.add_flag("--example1", o.example1, "search for a four-card witness");
    app.add_flag("--distinct", o.distinct, "require distinct r, s, t in the witness");

    const std::vector<std::pair<const char*, const char*>> commands = {
        {"deck", "deck of a multiset or function"},
        {"check", "reconstructibility of a multiset, or affinity of a function"},
        {"classify", "pattern tags of a deck-equal pair"},
        {"search", "stream deck-equal pairs, witnesses, or two-card instances"},
        {"verify-theorem", "exhaustive theorem conformance"},
        {"verify-affine", "affine function suites"},
        {"min-cards", "smallest number of cards determining every multiset"},
        {"gf", "finite field tables"},
    };
    for (const auto& [name, help] : commands)
        app.add_subcommand(name, help)->callback([&o, name = std::string(name)] { o.command = name; });

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome res;
        if (o.command == "deck")
            res = cmd_deck(o);
        else if (o.command == "check")
            res = cmd_check(o);
        else if (o.command == "classify")
            res = cmd_classify(o);
        else if (o.command == "search")
            res = cmd_search(o);
        else if (o.command == "verify-theorem")
            res = cmd_verify_theorem(o);
        else if (o.command == "verify-affine")
            res = cmd_verify_affine(o);
        else if (o.command == "min-cards")
            res = cmd_min_cards(o);
        else
            res = cmd_gf(o);

        for (const auto& line : res.stream)
            emit(line, o, out, true);
        Json j{{"tool", kToolName}, {"version", kToolVersion}, {"command", o.command},
               {"config", config_json(o)}, {"seed", o.seed}};
        for (auto& [key, value] : res.report.items())
            j[key] = value;
        if (!o.omit_timing)
            j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
        emit(j, o, out, false);
        if (res.falsified) {
            err << "falsification: a proved statement failed; see the report\n";
            return kExitFalsified;
        }
        return kExitOk;
    } catch (const Falsification& e) {
        err << "falsification: " << e.what() << '\n';
        return kExitFalsified;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "; raise --cap or DECKLAB_CAP, or shrink the input\n";
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

} // namespace decklab
