#include <algorithm>
#include <cctype>

#include <artin/parse.hpp>

namespace artin
{

namespace
{

constexpr unsigned max_exponent = 4096;

class Parser
{
public:
    Parser(const std::string &text, const Polynomial &proto) : text_(text), proto_(proto) {}

    Polynomial run()
    {
        Polynomial p = expr();
        skip();
        if (pos_ != text_.size()) {
            throw parse_error("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        }
        return p;
    }

private:
    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial constant(const Scalar &c) const
    {
        Polynomial p = empty();
        const Scalar v = proto_.field.normalize(c);
        if (!Field::is_zero(v)) {
            p.terms.emplace(Polynomial::Exponents(proto_.names.size(), 0), v);
        }
        return p;
    }
    Polynomial empty() const
    {
        Polynomial p = proto_;
        p.terms.clear();
        return p;
    }

    unsigned truncated_degree(const Polynomial::Exponents &e) const
    {
        unsigned d = 0;
        for (std::size_t k = 0; k < proto_.truncated_vars; ++k) {
            d += e[k];
        }
        return d;
    }

    void add_into(Polynomial &acc, const Polynomial::Exponents &e, const Scalar &c) const
    {
        if (proto_.trunc && truncated_degree(e) > *proto_.trunc) {
            return;
        }
        auto [it, inserted] = acc.terms.try_emplace(e, c);
        if (!inserted) {
            it->second = proto_.field.add(it->second, c);
            if (Field::is_zero(it->second)) {
                acc.terms.erase(it);
            }
        }
    }

    Polynomial add(const Polynomial &a, const Polynomial &b, bool negate) const
    {
        Polynomial r = a;
        for (const auto &[e, c] : b.terms) {
            add_into(r, e, negate ? proto_.field.neg(c) : c);
        }
        return r;
    }

    Polynomial mul(const Polynomial &a, const Polynomial &b) const
    {
        Polynomial r = empty();
        for (const auto &[ea, ca] : a.terms) {
            for (const auto &[eb, cb] : b.terms) {
                Polynomial::Exponents e(ea);
                for (std::size_t k = 0; k < e.size(); ++k) {
                    const unsigned s = unsigned(e[k]) + eb[k];
                    if (s > max_exponent) {
                        throw precondition_error("exponent exceeds " + std::to_string(max_exponent));
                    }
                    e[k] = static_cast<std::uint16_t>(s);
                }
                add_into(r, e, proto_.field.mul(ca, cb));
            }
        }
        return r;
    }

    Polynomial power(const Polynomial &base, unsigned e) const
    {
        Polynomial r = constant(Scalar(1));
        Polynomial b = base;
        while (e > 0) {
            if (e & 1u) {
                r = mul(r, b);
            }
            e >>= 1u;
            if (e > 0) {
                b = mul(b, b);
            }
        }
        return r;
    }

    Polynomial expr()
    {
        Polynomial acc = term();
        while (true) {
            if (accept('+')) {
                acc = add(acc, term(), false);
            } else if (accept('-')) {
                acc = add(acc, term(), true);
            } else {
                return acc;
            }
        }
    }

    Polynomial term()
    {
        Polynomial acc = unary();
        while (true) {
            if (accept('*')) {
                acc = mul(acc, unary());
            } else if (accept('/')) {
                const std::size_t at = pos_;
                const Polynomial d = unary();
                if (d.terms.size() != 1 || d.terms.begin()->first
                                               != Polynomial::Exponents(proto_.names.size(), 0)) {
                    throw parse_error("division only by a nonzero constant", at);
                }
                const Scalar inv = proto_.field.inv(d.terms.begin()->second);
                acc = mul(acc, constant(inv));
            } else {
                return acc;
            }
        }
    }

    Polynomial unary()
    {
        if (accept('-')) {
            const Polynomial p = unary();
            return add(empty(), p, true);
        }
        if (accept('+')) {
            return unary();
        }
        return factor();
    }

    Polynomial factor()
    {
        Polynomial base = primary();
        if (accept('^')) {
            skip();
            const std::size_t at = pos_;
            if (accept('-')) {
                throw parse_error("negative exponent", at);
            }
            skip();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                throw parse_error("expected exponent", pos_);
            }
            const mpz_class e = integer();
            if (e > max_exponent) {
                throw parse_error("exponent too large", at);
            }
            return power(base, static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    mpz_class integer()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return mpz_class(text_.substr(start, pos_ - start));
    }

    Polynomial primary()
    {
        skip();
        if (pos_ >= text_.size()) {
            throw parse_error("unexpected end of input", pos_);
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) {
                throw parse_error("expected ')'", pos_);
            }
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return constant(Scalar(integer()));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name = text_.substr(start, pos_ - start);
            auto it = std::find(proto_.names.begin(), proto_.names.end(), name);
            if (it == proto_.names.end()) {
                throw parse_error("unknown variable '" + name + "'", start);
            }
            Polynomial p = empty();
            Polynomial::Exponents e(proto_.names.size(), 0);
            e[std::size_t(it - proto_.names.begin())] = 1;
            add_into(p, e, proto_.field.from_int(1));
            return p;
        }
        throw parse_error("unexpected '" + std::string(1, c) + "'", pos_);
    }

    const std::string &text_;
    const Polynomial &proto_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const std::string &text, const std::vector<std::string> &names,
                            const Field &field, std::size_t truncated_vars,
                            std::optional<unsigned> trunc)
{
    Polynomial proto{names, field, truncated_vars, trunc, {}};
    return Parser(text, proto).run();
}

TruncatedSeries parse_poly(const std::string &text, const RingSpec &ring)
{
    const Polynomial p =
        parse_polynomial(text, ring.var_names(), ring.field(), ring.num_vars(), ring.trunc());
    TruncatedSeries s(ring);
    for (const auto &[e, c] : p.terms) {
        s.add_term(Monomial(e), c);
    }
    return s;
}

std::vector<std::string> split_list(const std::string &text)
{
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(' || c == '[') {
            ++depth;
        } else if (c == ')' || c == ']') {
            --depth;
        }
        if ((c == ';' || c == ',') && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const std::string &s) {
                                 return std::all_of(s.begin(), s.end(), [](unsigned char ch) {
                                     return std::isspace(ch);
                                 });
                             }),
              out.end());
    return out;
}

std::string format_series(const TruncatedSeries &s)
{
    if (s.is_zero()) {
        return "0";
    }
    const Field &field = s.ring().field();
    const auto &names = s.ring().var_names();
    std::string out;
    bool first = true;
    for (const auto &[m, c] : s.terms()) {
        Scalar v = field.display_value(c);
        if (first) {
            if (sgn(v) < 0) {
                out += "-";
            }
        } else {
            out += sgn(v) < 0 ? " - " : " + ";
        }
        v = abs(v);
        std::string mono;
        for (std::size_t k = 0; k < m.num_vars(); ++k) {
            if (m[k] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += names[k];
            if (m[k] > 1) {
                mono += "^" + std::to_string(m[k]);
            }
        }
        if (mono.empty()) {
            out += v.get_str();
        } else if (v == 1) {
            out += mono;
        } else if (v.get_den() == 1) {
            out += v.get_str() + "*" + mono;
        } else {
            out += mono + "*" + v.get_num().get_str() + "/" + v.get_den().get_str();
        }
        first = false;
    }
    return out;
}

} // namespace artin
