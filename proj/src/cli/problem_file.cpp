#include "bide/cli/problem_file.hpp"

#include <charconv>
#include <map>
#include <set>

namespace bide::cli {

namespace {

std::string_view trim(std::string_view s)
{
    const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && blank(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && blank(s.back()))
        s.remove_suffix(1);
    return s;
}

std::optional<int> to_int(std::string_view s)
{
    s = trim(s);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        return std::nullopt;
    return value;
}

std::string format_number(double v)
{
    return Expr::number(v).to_string();
}

struct Line {
    std::size_t number;
    std::string value;
};

class Reader {
public:
    explicit Reader(std::string_view text)
    {
        std::size_t line_no = 0;
        while (!text.empty()) {
            ++line_no;
            const std::size_t eol = text.find('\n');
            std::string_view line = text.substr(0, eol);
            text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

            if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;
            const std::size_t eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ProblemFileError(line_no, "expected 'key = value'");
            const std::string key(trim(line.substr(0, eq)));
            const std::string value(trim(line.substr(eq + 1)));
            if (key.empty())
                throw ProblemFileError(line_no, "missing key before '='");
            if (value.empty())
                throw ProblemFileError(line_no, "missing value for '" + key + "'");
            if (!entries_.emplace(key, Line{line_no, value}).second)
                throw ProblemFileError(line_no, "duplicate key '" + key + "'");
        }
    }

    const std::map<std::string, Line>& entries() const { return entries_; }

private:
    std::map<std::string, Line> entries_;
};

Expr parse_expr_at(const Line& line, const std::string& key)
{
    try {
        return Expr::parse(line.value);
    } catch (const ParseError& e) {
        throw ProblemFileError(line.number, key + ": " + e.what());
    }
}

Coefficient parse_coefficient(const Line& line, const std::string& key)
{
    const Expr e = parse_expr_at(line, key);
    if (e.uses_t())
        throw ProblemFileError(line.number, key + ": may only depend on x");
    if (!e.is_constant())
        return e;
    try {
        return e.eval(0.0);
    } catch (const Error& err) {
        throw ProblemFileError(line.number, key + ": " + err.what());
    }
}

double parse_constant(const Line& line, const std::string& key)
{
    const Coefficient c = parse_coefficient(line, key);
    if (!std::holds_alternative<double>(c))
        throw ProblemFileError(line.number, key + ": must be a constant");
    return std::get<double>(c);
}

int parse_int_at(const Line& line, const std::string& key)
{
    const auto v = to_int(line.value);
    if (!v)
        throw ProblemFileError(line.number, key + ": expected an integer, got '" + line.value + "'");
    return *v;
}

/// Splits "prefix.<index>[.suffix]"; returns nullopt for malformed indices.
std::optional<std::pair<int, std::string>> split_indexed(std::string_view key, std::string_view prefix)
{
    if (key.substr(0, prefix.size()) != prefix)
        return std::nullopt;
    key.remove_prefix(prefix.size());
    const std::size_t dot = key.find('.');
    const std::string_view index = key.substr(0, dot);
    const auto idx = to_int(index);
    if (!idx || *idx < 0 || index.empty() || index.front() == '+' || index.front() == '-')
        return std::nullopt;
    return std::pair{*idx, dot == std::string_view::npos ? std::string{} : std::string(key.substr(dot + 1))};
}

bool same_coefficient(const Coefficient& a, const Coefficient& b)
{
    if (a.index() != b.index())
        return false;
    if (const double* va = std::get_if<double>(&a))
        return *va == std::get<double>(b);
    return std::get<Expr>(a) == std::get<Expr>(b);
}

bool same_kernel(const Kernel& a, const Kernel& b)
{
    if (a.index() != b.index())
        return false;
    if (const auto* ca = std::get_if<ConvolutionKernel>(&a))
        return ca->m == std::get<ConvolutionKernel>(b).m;
    return std::get<GeneralKernel>(a).k == std::get<GeneralKernel>(b).k;
}

} // namespace

std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> out;
    while (true) {
        const std::size_t comma = text.find(',');
        const auto v = to_int(text.substr(0, comma));
        if (!v)
            throw ProblemError("expected a comma-separated list of integers, got '" + std::string(text) + "'");
        out.push_back(*v);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

ProblemFile parse_problem_file(std::string_view text)
{
    const Reader reader(text);
    const auto& entries = reader.entries();

    ProblemFile file;
    IdeProblem& p = file.problem;

    const auto order_it = entries.find("order");
    if (order_it == entries.end())
        throw ProblemError("missing required key 'order'");
    p.order = parse_int_at(order_it->second, "order");
    if (p.order < 1)
        throw ProblemFileError(order_it->second.number,
                               "order must satisfy k >= 1, got " + std::to_string(p.order));

    p.coefficients.assign(static_cast<std::size_t>(p.order) + 1, 0.0);
    std::vector<std::optional<double>> ics(static_cast<std::size_t>(p.order));
    struct PartialTerm {
        std::optional<Coefficient> weight;
        std::optional<Kernel> kernel;
        std::optional<int> deriv;
        std::size_t line = 0;
    };
    std::map<int, PartialTerm> terms;
    bool have_rhs = false;

    for (const auto& [key, line] : entries) {
        if (key == "order") {
            continue;
        } else if (key == "name") {
            p.name = line.value;
        } else if (key == "rhs") {
            p.rhs = parse_expr_at(line, key);
            if (p.rhs.uses_t())
                throw ProblemFileError(line.number, "rhs may only depend on x");
            have_rhs = true;
        } else if (key == "exact") {
            p.exact = parse_expr_at(line, key);
            if (p.exact->uses_t())
                throw ProblemFileError(line.number, "exact may only depend on x");
        } else if (key == "n") {
            file.options.n = parse_int_at(line, key);
        } else if (key == "samples") {
            file.options.samples = parse_int_at(line, key);
            if (*file.options.samples < 2)
                throw ProblemFileError(line.number, "samples must be at least 2");
        } else if (key == "out") {
            file.options.out = line.value;
        } else if (key == "sweep") {
            try {
                file.options.sweep = parse_int_list(line.value);
            } catch (const ProblemError& e) {
                throw ProblemFileError(line.number, std::string("sweep: ") + e.what());
            }
        } else if (auto coeff = split_indexed(key, "coeff."); coeff && coeff->second.empty()) {
            if (coeff->first > p.order)
                throw ProblemFileError(line.number, key + ": index exceeds order " + std::to_string(p.order));
            p.coefficients[static_cast<std::size_t>(coeff->first)] = parse_coefficient(line, key);
        } else if (auto ic = split_indexed(key, "ic."); ic && ic->second.empty()) {
            if (ic->first >= p.order)
                throw ProblemFileError(line.number, key + ": only ic.0 .. ic." + std::to_string(p.order - 1) +
                                                        " are allowed for order " + std::to_string(p.order));
            ics[static_cast<std::size_t>(ic->first)] = parse_constant(line, key);
        } else if (auto term = split_indexed(key, "integral."); term) {
            PartialTerm& t = terms[term->first];
            t.line = t.line == 0 ? line.number : std::min(t.line, line.number);
            if (term->second == "weight") {
                const Coefficient w = parse_coefficient(line, key);
                t.weight = w;
            } else if (term->second == "kernel") {
                if (line.value.rfind("conv:", 0) == 0) {
                    const auto m = to_int(std::string_view(line.value).substr(5));
                    if (!m || *m < 1)
                        throw ProblemFileError(line.number, key + ": conv:<m> needs an integer m >= 1");
                    t.kernel = ConvolutionKernel{*m};
                } else {
                    t.kernel = GeneralKernel{parse_expr_at(line, key)};
                }
            } else if (term->second == "deriv") {
                t.deriv = parse_int_at(line, key);
            } else {
                throw ProblemFileError(line.number, "unknown key '" + key + "'");
            }
        } else {
            throw ProblemFileError(line.number, "unknown key '" + key + "'");
        }
    }

    if (!have_rhs)
        throw ProblemError("missing required key 'rhs'");
    for (std::size_t i = 0; i < ics.size(); ++i) {
        if (!ics[i])
            throw ProblemError("missing initial condition ic." + std::to_string(i) + " (order " +
                               std::to_string(p.order) + " needs exactly " + std::to_string(p.order) + ")");
        p.initial_conditions.push_back(*ics[i]);
    }
    for (auto& [idx, t] : terms) {
        if (!t.kernel)
            throw ProblemFileError(t.line, "integral." + std::to_string(idx) + ".kernel is required");
        IntegralTerm term;
        term.weight = t.weight.value_or(Coefficient{1.0});
        term.kernel = *t.kernel;
        term.deriv = t.deriv.value_or(0);
        p.integral_terms.push_back(std::move(term));
    }

    p.validate();
    return file;
}

std::string format_problem_file(const ProblemFile& file)
{
    const IdeProblem& p = file.problem;
    std::string out;
    const auto put = [&out](const std::string& key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    put("name", p.name);
    put("order", std::to_string(p.order));
    for (std::size_t i = 0; i < p.coefficients.size(); ++i)
        put("coeff." + std::to_string(i), to_string(p.coefficients[i]));
    for (std::size_t i = 0; i < p.integral_terms.size(); ++i) {
        const IntegralTerm& t = p.integral_terms[i];
        const std::string prefix = "integral." + std::to_string(i) + ".";
        put(prefix + "weight", to_string(t.weight));
        if (const auto* conv = std::get_if<ConvolutionKernel>(&t.kernel))
            put(prefix + "kernel", "conv:" + std::to_string(conv->m));
        else
            put(prefix + "kernel", std::get<GeneralKernel>(t.kernel).k.to_string());
        put(prefix + "deriv", std::to_string(t.deriv));
    }
    for (std::size_t i = 0; i < p.initial_conditions.size(); ++i)
        put("ic." + std::to_string(i), format_number(p.initial_conditions[i]));
    put("rhs", p.rhs.to_string());
    if (p.exact)
        put("exact", p.exact->to_string());
    if (file.options.n)
        put("n", std::to_string(*file.options.n));
    if (!file.options.sweep.empty()) {
        std::string list;
        for (std::size_t i = 0; i < file.options.sweep.size(); ++i)
            list += (i ? "," : "") + std::to_string(file.options.sweep[i]);
        put("sweep", list);
    }
    if (file.options.samples)
        put("samples", std::to_string(*file.options.samples));
    if (file.options.out)
        put("out", *file.options.out);
    return out;
}

bool same_problem(const IdeProblem& a, const IdeProblem& b)
{
    if (a.name != b.name || a.order != b.order || a.initial_conditions != b.initial_conditions)
        return false;
    if (!(a.rhs == b.rhs) || a.exact.has_value() != b.exact.has_value() || (a.exact && !(*a.exact == *b.exact)))
        return false;
    if (a.coefficients.size() != b.coefficients.size() || a.integral_terms.size() != b.integral_terms.size())
        return false;
    for (std::size_t i = 0; i < a.coefficients.size(); ++i)
        if (!same_coefficient(a.coefficients[i], b.coefficients[i]))
            return false;
    for (std::size_t i = 0; i < a.integral_terms.size(); ++i) {
        const IntegralTerm& ta = a.integral_terms[i];
        const IntegralTerm& tb = b.integral_terms[i];
        if (ta.deriv != tb.deriv || !same_coefficient(ta.weight, tb.weight) || !same_kernel(ta.kernel, tb.kernel))
            return false;
    }
    return true;
}

namespace {

constexpr std::string_view kExample1 = R"(# y'''' - y + int_0^x y(t) dt = x + (x+3) e^x, exact solution 1 + x e^x
name = example1
order = 4
coeff.0 = -1
coeff.4 = 1
integral.0.weight = 1
integral.0.kernel = conv:1
integral.0.deriv = 0
ic.0 = 1
ic.1 = 1
ic.2 = 2
ic.3 = 3
rhs = x + (x+3)*exp(x)
exact = 1 + x*exp(x)
n = 7
)";

constexpr std::string_view kExample2 = R"(# (1+x^2) y'' + y + cos(x) int_0^x (x-t)^2 y'(t) dt = r(x), exact solution sin(x)
name = example2
order = 2
coeff.0 = 1
coeff.2 = 1 + x^2
integral.0.weight = cos(x)
integral.0.kernel = (x - t)^2
integral.0.deriv = 1
ic.0 = 0
ic.1 = 1
rhs = 2*(x - sin(x))*cos(x) - x^2*sin(x)
exact = sin(x)
n = 7
sweep = 3,5,7
)";

constexpr std::string_view kPopulation = R"(# Female birth model B'(t) - int_0^t (t-s) B(s) ds = g(t), B(0) = 1, written in x
name = population
order = 1
coeff.1 = 1
integral.0.weight = -1
integral.0.kernel = conv:2
integral.0.deriv = 0
ic.0 = 1
rhs = (1/4)*(6*(1+x) - 7*exp(x/2) - 4*sin(x))
exact = (1/2)*(exp(x/2) - sin(x) + cos(x))
n = 5
sweep = 5,7
)";

} // namespace

const std::vector<BuiltinExample>& builtin_examples()
{
    static const std::vector<BuiltinExample> examples{
        {"example1", "fourth order, constant coefficients, convolution kernel", kExample1},
        {"example2", "second order, variable coefficient, general kernel (x-t)^2 with weight cos(x)", kExample2},
        {"population", "first-order population model with kernel (t-s)", kPopulation},
    };
    return examples;
}

const BuiltinExample* find_builtin(std::string_view name)
{
    for (const auto& ex : builtin_examples())
        if (ex.name == name)
            return &ex;
    return nullptr;
}

} // namespace bide::cli
