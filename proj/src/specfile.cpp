#include "fibtc/specfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "fibtc/parser.hpp"

namespace fibtc {

namespace {

std::string located(const std::string& path, int line, const std::string& message)
{
    if (line <= 0)
        return path + ": " + message;
    return path + ":" + std::to_string(line) + ": " + message;
}

std::string trim(std::string_view s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ','))
        out.push_back(trim(item));
    return out;
}

struct Value {
    std::string text;
    int line = 0;
};

const char* const kReservedNames[] = {"t", "S", "T", "X", "Y", "Z"};

class SpecReader {
public:
    explicit SpecReader(std::string path) : path_(std::move(path)) {}

    SpecFile read(std::string_view text)
    {
        scan(text);
        return build();
    }

private:
    [[noreturn]] void fail(int line, const std::string& message) const
    {
        throw SpecError(path_, line, message);
    }

    void scan(std::string_view text)
    {
        std::string section;
        int lineno = 0;
        std::istringstream in{std::string(text)};
        std::string raw;
        while (std::getline(in, raw)) {
            ++lineno;
            std::string line = trim(raw.substr(0, raw.find('#')));
            if (line.empty())
                continue;
            if (line.front() == '[') {
                if (line.back() != ']')
                    fail(lineno, "malformed section header '" + line + "'");
                section = trim(std::string_view(line).substr(1, line.size() - 2));
                if (section != "bundle" && section != "base" && section != "classes" &&
                    section != "options")
                    fail(lineno, "unknown section [" + section + "]");
                if (!seen_sections_.emplace(section, lineno).second)
                    fail(lineno, "section [" + section + "] appears twice");
                continue;
            }
            auto eq = line.find('=');
            if (eq == std::string::npos)
                fail(lineno, "expected 'key = value'");
            if (section.empty())
                fail(lineno, "entry outside of any section");
            std::string key = trim(std::string_view(line).substr(0, eq));
            std::string value = trim(std::string_view(line).substr(eq + 1));
            if (value.empty())
                fail(lineno, "empty value for '" + key + "'");
            store(section, key, {value, lineno});
        }
    }

    void store(const std::string& section, const std::string& key, Value v)
    {
        static const std::map<std::string, std::vector<std::string>> allowed = {
            {"bundle", {"field", "rank"}},
            {"base", {"coefficients", "generators", "relation", "relations", "truncation", "strategy"}},
            {"options", {"kmax", "coefficients"}},
        };
        if (section == "classes") {
            if (key.size() < 2 || key.size() > 4 || key[0] != 'w' ||
                !std::all_of(key.begin() + 1, key.end(), [](char c) { return std::isdigit(c); }))
                fail(v.line, "class keys are w1, w2, ...; got '" + key + "'");
            int i = std::stoi(key.substr(1));
            if (!classes_.emplace(i, v).second)
                fail(v.line, "class " + key + " given twice");
            return;
        }
        const auto& keys = allowed.at(section);
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            fail(v.line, "unknown key '" + key + "' in [" + section + "]");
        if (key == "relation" || key == "relations") {
            for (auto& item : key == "relation" ? std::vector<std::string>{v.text} : split_commas(v.text)) {
                if (item.empty())
                    fail(v.line, "empty relation");
                relations_.push_back({item, v.line});
            }
            return;
        }
        if (!entries_.emplace(section + "." + key, v).second)
            fail(v.line, "key '" + key + "' given twice in [" + section + "]");
    }

    const Value* entry(const std::string& key) const
    {
        auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }

    int to_int(const Value& v, const char* what) const
    {
        if (v.text.empty() || !std::all_of(v.text.begin(), v.text.end(), [](char c) { return std::isdigit(c); }))
            fail(v.line, std::string(what) + " must be a non-negative integer, got '" + v.text + "'");
        try {
            return std::stoi(v.text);
        } catch (const std::out_of_range&) {
            fail(v.line, std::string(what) + " is too large");
        }
    }

    CoefficientRing to_coefficients(const Value& v) const
    {
        auto c = parse_coefficients(v.text);
        if (!c)
            fail(v.line, "coefficients must be f2 or z, got '" + v.text + "'");
        return *c;
    }

    SpecFile build()
    {
        SpecFile out;
        out.path = path_;

        const Value* field_v = entry("bundle.field");
        const Value* rank_v = entry("bundle.rank");
        if (!field_v)
            fail(0, "missing 'field' in [bundle]");
        if (!rank_v)
            fail(0, "missing 'rank' in [bundle]");
        auto field = parse_field(field_v->text);
        if (!field)
            fail(field_v->line, "field must be R, C or H, got '" + field_v->text + "'");
        int rank = to_int(*rank_v, "rank");
        if (rank < 2)
            fail(rank_v->line, "rank must be at least 2");

        CoefficientRing ring = *field == Field::R ? CoefficientRing::F2 : CoefficientRing::Integers;
        if (const Value* c = entry("base.coefficients")) {
            ring = to_coefficients(*c);
            if (*field == Field::R && ring == CoefficientRing::Integers)
                fail(c->line, "real bundles need f2 base coefficients");
        }

        PresentationPtr base = build_base(ring);
        const int d = real_dimension(*field);

        std::vector<Polynomial> classes;
        for (int i = 1; i <= rank; ++i)
            classes.emplace_back(base->signature());
        for (const auto& [i, v] : classes_) {
            if (i < 1 || i > rank)
                fail(v.line, "class w" + std::to_string(i) + " outside 1.." + std::to_string(rank));
            Polynomial p = parse_at(v, base->signature());
            Polynomial nf = base->reduce(p);
            if (!nf.is_zero() && (!nf.is_homogeneous() || *nf.degree() != d * i))
                fail(v.line, "w" + std::to_string(i) + " must have degree " + std::to_string(d * i));
            classes[static_cast<std::size_t>(i - 1)] = p;
        }
        try {
            out.bundle = make_bundle(*field, rank, base, classes);
        } catch (const AlgebraError& e) {
            fail(line_of("classes"), e.what());
        }

        if (const Value* k = entry("options.kmax"))
            out.k_max = to_int(*k, "kmax");
        if (const Value* c = entry("options.coefficients"))
            out.coefficients = to_coefficients(*c);
        return out;
    }

    int line_of(const std::string& section) const
    {
        auto it = seen_sections_.find(section);
        return it == seen_sections_.end() ? 0 : it->second;
    }

    Polynomial parse_at(const Value& v, const SignaturePtr& sig) const
    {
        try {
            return parse(v.text, sig);
        } catch (const ParseError& e) {
            fail(v.line, std::string(e.what()) + " in '" + v.text + "'");
        }
    }

    PresentationPtr build_base(CoefficientRing ring)
    {
        std::vector<Generator> gens;
        int gen_line = line_of("base");
        if (const Value* g = entry("base.generators")) {
            gen_line = g->line;
            for (const auto& item : split_commas(g->text)) {
                auto colon = item.find(':');
                if (colon == std::string::npos)
                    fail(g->line, "generator '" + item + "' needs a degree, as in x:1");
                std::string name = trim(std::string_view(item).substr(0, colon));
                Value deg{trim(std::string_view(item).substr(colon + 1)), g->line};
                for (const char* r : kReservedNames)
                    if (name == r)
                        fail(g->line, "generator name '" + name + "' is reserved for fibre generators");
                gens.push_back({name, to_int(deg, "generator degree")});
            }
        }

        SignaturePtr sig;
        try {
            sig = make_signature(ring, gens);
        } catch (const AlgebraError& e) {
            fail(gen_line, e.what());
        }

        std::vector<Polynomial> rels;
        for (const auto& v : relations_)
            rels.push_back(parse_at(v, sig));

        std::optional<int> truncation;
        if (const Value* t = entry("base.truncation"))
            truncation = to_int(*t, "truncation");

        NormalFormStrategy strategy = NormalFormStrategy::MonicTower;
        if (const Value* s = entry("base.strategy")) {
            if (s->text == "groebner")
                strategy = NormalFormStrategy::GroebnerF2;
            else if (s->text != "tower")
                fail(s->line, "strategy must be tower or groebner, got '" + s->text + "'");
        }

        try {
            return completed(RingPresentation(sig, std::move(rels), strategy, truncation));
        } catch (const AlgebraError& e) {
            fail(line_of("base"), e.what());
        }
    }

    std::string path_;
    std::map<std::string, int> seen_sections_;
    std::map<std::string, Value> entries_;
    std::vector<Value> relations_;
    std::map<int, Value> classes_;
};

}  // namespace

SpecError::SpecError(const std::string& path, int line, const std::string& message)
    : std::runtime_error(located(path, line, message)), line_(line)
{
}

std::optional<CoefficientRing> parse_coefficients(std::string_view s)
{
    if (s == "f2" || s == "F2")
        return CoefficientRing::F2;
    if (s == "z" || s == "Z")
        return CoefficientRing::Integers;
    return std::nullopt;
}

SpecFile parse_spec(std::string_view text, const std::string& path)
{
    return SpecReader(path).read(text);
}

SpecFile load_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw SpecError(path, 0, "cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str(), path);
}

}  // namespace fibtc
