// SPDX-License-Identifier: Apache-2.0
#include "qinv/literals.hpp"

#include <charconv>

namespace qinv {

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& token) {
    throw ParseError(what + ": offending token '" + token + "'");
}

i64 parse_int(const std::string& s) {
    i64 v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) bad("expected an integer", s);
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '{' || c == '(') ++depth;
        if (c == '}' || c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// splits "body@base" at the last top-level '@'
std::pair<std::string, std::string> split_at_base(const std::string& s, const char* what) {
    auto pos = s.rfind('@');
    if (pos == std::string::npos) bad(std::string(what) + " literal needs '@<field>'", s);
    return {s.substr(0, pos), s.substr(pos + 1)};
}

// base spec possibly of the form "sqrt(e)/Qp:5" or "split/Qp:5"
struct BaseSpec {
    FieldDescriptor field;
    std::optional<EtaleQuadratic> ext;
};

BaseSpec parse_base_spec(const std::string& text, i64 eps) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return {parse_field(text, eps), std::nullopt};
    FieldDescriptor field = parse_field(text.substr(slash + 1), eps);
    std::string head = text.substr(0, slash);
    if (head == "split") return {field, EtaleQuadratic::split_algebra(field)};
    if (head.rfind("sqrt(", 0) == 0 && head.back() == ')') {
        auto d = parse_value_token(field, head.substr(5, head.size() - 6));
        return {field, EtaleQuadratic::field(d)};
    }
    bad("expected 'split' or 'sqrt(d)' etale spec", head);
}

}  // namespace

FieldDescriptor parse_field(const std::string& text, i64 eps) {
    if (text == "Q") return FieldDescriptor::rationals();
    if (text == "R") return FieldDescriptor::reals();
    if (text == "Q2") return FieldDescriptor::padic2();
    if (text.rfind("Qp:", 0) == 0) {
        i64 p = parse_int(text.substr(3));
        return eps ? FieldDescriptor::padic(p, eps) : FieldDescriptor::padic(p);
    }
    bad("expected field spec Q|R|Qp:<p>|Q2", text);
}

SquareClass parse_value_token(const FieldDescriptor& field, const std::string& token) {
    if (token.empty()) bad("empty value token", token);
    if (field.kind == FieldKind::Padic) {
        std::string t = token;
        int sign = 1;
        if (t[0] == '-') { sign = -1; t = t.substr(1); }
        SquareClass c = SquareClass::one(field);
        if (t == "1") { /* unit */ }
        else if (t == "e") c.eps = true;
        else if (t == "p") c.pi = true;
        else if (t == "ep" || t == "pe") { c.eps = true; c.pi = true; }
        else return square_class(field, parse_int(token));
        if (sign < 0) c = c.times(square_class(field, -1));
        return c;
    }
    return square_class(field, parse_int(token));
}

QuadraticForm parse_form(const std::string& text, i64 eps) {
    auto [body, base] = split_at_base(text, "form");
    if (body.rfind("diag:", 0) != 0) bad("form literal must start with 'diag:'", text);
    FieldDescriptor field = parse_field(base, eps);
    std::vector<SquareClass> classes;
    auto tokens = split(body.substr(5), ',');
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        try {
            classes.push_back(parse_value_token(field, tokens[i]));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " (coefficient " + std::to_string(i + 1) +
                             ")");
        }
    }
    if (classes.empty()) throw DegenerateInput("form literal without coefficients");
    return QuadraticForm::from_classes(field, std::move(classes));
}

Place parse_place(const std::string& text) {
    auto dot = text.find('.');
    std::string head = dot == std::string::npos ? text : text.substr(0, dot);
    int slot = dot == std::string::npos ? 0 : int(parse_int(text.substr(dot + 1)));
    Place v = head == "inf" ? Place::real() : Place::finite(parse_int(head));
    return v.with_slot(slot);
}

EtaleQuadratic parse_etale(const std::string& text, i64 eps) {
    auto [body, base] = split_at_base(text, "etale");
    FieldDescriptor field = parse_field(base, eps);
    if (body == "split") return EtaleQuadratic::split_algebra(field);
    if (body.rfind("sqrt(", 0) == 0 && body.back() == ')')
        return EtaleQuadratic::field(parse_value_token(field, body.substr(5, body.size() - 6)));
    bad("expected 'split@F' or 'sqrt(d)@F'", text);
}

BrauerClass2 parse_class(const std::string& text, i64 eps) {
    auto [body, base] = split_at_base(text, "class");
    BaseSpec bs = parse_base_spec(base, eps);
    if (body.rfind("quat(", 0) == 0 && body.back() == ')') {
        if (bs.ext) bad("quaternion literals are supported over base fields only", text);
        auto args = split(body.substr(5, body.size() - 6), ',');
        if (args.size() != 2) bad("quat needs two slots", body);
        auto a = parse_value_token(bs.field, args[0]);
        auto b = parse_value_token(bs.field, args[1]);
        return quaternion_class(bs.field, a, b);
    }
    if (body.rfind("ram{", 0) == 0 && body.back() == '}') {
        std::set<Place> ram;
        std::string inner = body.substr(4, body.size() - 5);
        if (!inner.empty())
            for (const auto& tok : split(inner, ',')) ram.insert(parse_place(tok));
        if (bs.ext) return BrauerClass2::from_ram(*bs.ext, std::move(ram));
        return BrauerClass2::from_ram(bs.field, std::move(ram));
    }
    bad("expected 'quat(a,b)@F' or 'ram{..}@F'", text);
}

MotiveObject parse_motive(const std::string& text, i64 eps) {
    auto [body, base] = split_at_base(text, "motive");
    if (body.rfind("U(", 0) != 0 || body.back() != ')') bad("expected 'U(...)@F'", text);
    std::string inner = body.substr(2, body.size() - 3);
    std::optional<i64> ind;
    auto parts = split(inner, ';');
    std::string cls_text = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].rfind("ind=", 0) == 0) ind = parse_int(parts[i].substr(4));
        else bad("unknown motive option", parts[i]);
    }
    BrauerClass2 cls = parse_class(cls_text + "@" + base, eps);
    if (cls.ext) return MotiveObject::over_quadratic(*cls.ext, cls, ind);
    return MotiveObject::over_base(cls, ind);
}

std::pair<BrauerClass2, BrauerClass2> parse_quaternion_pair(const std::string& text, i64 eps) {
    auto [body, base] = split_at_base(text, "pair");
    if (body.rfind("pair{", 0) != 0 || body.back() != '}') bad("expected 'pair{..,..}@F'", text);
    auto args = split(body.substr(5, body.size() - 6), ',');
    if (args.size() != 2) bad("pair needs two classes", body);
    return {parse_class(args[0] + "@" + base, eps), parse_class(args[1] + "@" + base, eps)};
}

InvolutionDescriptor parse_involution(const std::string& text, i64 eps) {
    auto [body, base] = split_at_base(text, "involution");
    if (body.rfind("iv:", 0) != 0) bad("involution literal must start with 'iv:'", text);
    FieldDescriptor field = parse_field(base, eps);
    InvolutionDescriptor d;
    d.base = field;
    d.algebra_class = BrauerClass2::trivial(field);
    bool saw_star = false;
    for (const auto& kv : split(body.substr(3), ';')) {
        auto pos = kv.find('=');
        if (pos == std::string::npos) bad("expected key=value", kv);
        std::string key = kv.substr(0, pos), val = kv.substr(pos + 1);
        if (key == "deg") d.deg = int(parse_int(val));
        else if (key == "A") d.algebra_class = parse_class(val + "@" + base, eps);
        else if (key == "delta") d.delta = parse_value_token(field, val);
        else if (key == "sgn") {
            auto orderings = field.orderings();
            auto vals = split(val, ',');
            if (vals.size() != orderings.size()) bad("signature count mismatch", val);
            for (std::size_t i = 0; i < vals.size(); ++i)
                d.signatures[orderings[i].id] = int(parse_int(vals[i]));
        } else if (key == "star") {
            d.star = parse_int(val) != 0;
            saw_star = true;
        } else if (key == "C0") {
            if (val.rfind("base:", 0) == 0) {
                d.clifford =
                    EvenCliffordDescriptor::over_base(parse_class(val.substr(5) + "@" + base, eps));
            } else if (val.rfind("split:{", 0) == 0 && val.back() == '}') {
                auto args = split(val.substr(7, val.size() - 8), ',');
                if (args.size() != 2) bad("split center needs two classes", val);
                d.clifford =
                    EvenCliffordDescriptor::split_pair(parse_class(args[0] + "@" + base, eps),
                                                       parse_class(args[1] + "@" + base, eps));
            } else if (val.rfind("sqrt(", 0) == 0) {
                auto close = val.find(')');
                if (close == std::string::npos) bad("unterminated sqrt center", val);
                auto delta = parse_value_token(field, val.substr(5, close - 5));
                if (val.size() <= close + 2 || val[close + 1] != ':')
                    bad("sqrt center needs ':<class>'", val);
                auto cls =
                    parse_class(val.substr(close + 2) + "@sqrt(" + delta.token() + ")/" + base, eps);
                d.clifford = EvenCliffordDescriptor::over_quadratic(delta, cls);
            } else {
                bad("unknown Clifford center", val);
            }
        } else {
            bad("unknown involution key", key);
        }
    }
    if (!saw_star)
        d.star = d.deg == 4 && d.delta_trivial() && d.algebra_class.is_trivial();
    d.validate();
    return d;
}

std::string class_literal(const BrauerClass2& cls) {
    std::string base = cls.ext ? cls.ext->token() + "/" + cls.field.spec_string()
                               : cls.field.spec_string();
    return cls.token() + "@" + base;
}

std::string motive_literal(const MotiveObject& m) {
    std::string base =
        m.center ? m.center->token() + "/" + m.base.spec_string() : m.base.spec_string();
    return "U(" + m.cls.token() + ";ind=" + std::to_string(m.ind_hint) + ")@" + base;
}

}  // namespace qinv
