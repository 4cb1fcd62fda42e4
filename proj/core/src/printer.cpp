#include "deltalf/printer.hpp"

#include <algorithm>
#include <cctype>

#include "deltalf/lexer.hpp"

namespace deltalf {

namespace {

void constants(const Term& t, std::set<std::string>& out) {
    if (t->tag == Tag::FamConst || t->tag == Tag::ObjConst) out.insert(t->name);
    if (arity(t->tag) >= 1) constants(t->a, out);
    if (arity(t->tag) == 2) constants(t->b, out);
}

// Precedence levels, loosest first.
enum Level { kBinder = 0, kUnion = 1, kInter = 2, kApp = 3, kPrefix = 4, kAtom = 5 };

class Printer {
public:
    Printer(const std::vector<std::string>& ctx, std::set<std::string> avoid) : names_(ctx), avoid_(std::move(avoid)) {}

    std::string go(const Term& t, int level) {
        int own = level_of(t);
        std::string s = body(t);
        return own < level ? "(" + s + ")" : s;
    }

private:
    static int level_of(const Term& t) {
        switch (t->tag) {
        case Tag::Pi:
        case Tag::RelArrow:
        case Tag::Lam:
        case Tag::RelLam: return kBinder;
        case Tag::Union: return kUnion;
        case Tag::Inter: return kInter;
        case Tag::App:
        case Tag::RelApp: return kApp;
        case Tag::ProjL:
        case Tag::ProjR:
        case Tag::InjL:
        case Tag::InjR: return kPrefix;
        default: return kAtom;
        }
    }

    std::string fresh(const std::string& hint) {
        std::string base = hint.empty() || !is_identifier(hint) || is_reserved(hint) ? "x" : hint;
        auto taken = [&](const std::string& n) {
            return avoid_.count(n) || is_reserved(n) || std::find(names_.begin(), names_.end(), n) != names_.end();
        };
        if (!taken(base)) return base;
        while (!base.empty() && std::isdigit(static_cast<unsigned char>(base.back()))) base.pop_back();
        if (base.empty()) base = "x";
        for (int i = 1;; ++i) {
            std::string n = base + std::to_string(i);
            if (!taken(n)) return n;
        }
    }

    std::string bound(const Term& body, const std::string& name) {
        names_.push_back(name);
        std::string s = go(body, kBinder);
        names_.pop_back();
        return s;
    }

    std::string var(int i) const {
        int n = static_cast<int>(names_.size());
        if (i < n) return names_[n - 1 - i];
        return "#" + std::to_string(i - n);
    }

    std::string body(const Term& t) {
        switch (t->tag) {
        case Tag::Type: return "Type";
        case Tag::FamConst:
        case Tag::ObjConst: return t->name;
        case Tag::Var: return var(t->index);
        case Tag::Pi: {
            if (!occurs_free(t->b, 0)) {
                std::string dom = go(t->a, kUnion);
                names_.push_back("");
                std::string cod = go(t->b, kBinder);
                names_.pop_back();
                return dom + " -> " + cod;
            }
            std::string n = fresh(t->name);
            std::string dom = go(t->a, kBinder);
            return "(" + n + " : " + dom + ") -> " + bound(t->b, n);
        }
        case Tag::RelArrow: return go(t->a, kUnion) + " >-> " + go(t->b, kBinder);
        case Tag::Union: return go(t->a, kUnion) + " | " + go(t->b, kInter);
        case Tag::Inter: return go(t->a, kInter) + " & " + go(t->b, kApp);
        case Tag::Lam:
        case Tag::RelLam: {
            std::string n = fresh(t->name);
            std::string dom = go(t->a, kBinder);
            return std::string(t->tag == Tag::Lam ? "fun " : "sfun ") + n + " : " + dom + " => " + bound(t->b, n);
        }
        case Tag::App: return go(t->a, kApp) + " " + go(t->b, kAtom);
        case Tag::RelApp: return go(t->a, kApp) + " $ " + go(t->b, kAtom);
        case Tag::Pair: return "<" + go(t->a, kBinder) + ", " + go(t->b, kBinder) + ">";
        case Tag::CoPair: return "[" + go(t->a, kBinder) + ", " + go(t->b, kBinder) + "]";
        case Tag::ProjL: return "proj_l " + go(t->a, kPrefix);
        case Tag::ProjR: return "proj_r " + go(t->a, kPrefix);
        case Tag::InjL:
        case Tag::InjR:
            return std::string(t->tag == Tag::InjL ? "inj_l [" : "inj_r [") + go(t->a, kBinder) + "] " +
                   go(t->b, kPrefix);
        }
        return "?";
    }

    std::vector<std::string> names_;
    std::set<std::string> avoid_;
};

void pure_constants(const PureTerm& m, std::set<std::string>& out) {
    if (m->tag == PTag::Const) out.insert(m->name);
    if (m->a) pure_constants(m->a, out);
    if (m->b) pure_constants(m->b, out);
}

class PurePrinter {
public:
    PurePrinter(const std::vector<std::string>& ctx, std::set<std::string> avoid)
        : names_(ctx), avoid_(std::move(avoid)) {}

    std::string go(const PureTerm& m, int level) {
        switch (m->tag) {
        case PTag::Var: {
            int n = static_cast<int>(names_.size());
            return m->index < n ? names_[n - 1 - m->index] : "#" + std::to_string(m->index - n);
        }
        case PTag::Const: return m->name;
        case PTag::App: {
            std::string s = go(m->a, kApp) + " " + go(m->b, kAtom);
            return level > kApp ? "(" + s + ")" : s;
        }
        case PTag::Lam: {
            std::string n = fresh(m->name);
            names_.push_back(n);
            std::string s = "fun " + n + " => " + go(m->a, kBinder);
            names_.pop_back();
            return level > kBinder ? "(" + s + ")" : s;
        }
        }
        return "?";
    }

private:
    std::string fresh(const std::string& hint) {
        std::string base = hint.empty() || is_reserved(hint) ? "x" : hint;
        auto taken = [&](const std::string& n) {
            return avoid_.count(n) || std::find(names_.begin(), names_.end(), n) != names_.end();
        };
        if (!taken(base)) return base;
        for (int i = 1;; ++i)
            if (!taken(base + std::to_string(i))) return base + std::to_string(i);
    }

    std::vector<std::string> names_;
    std::set<std::string> avoid_;
};

}  // namespace

std::string print(const Term& t, const std::vector<std::string>& ctx, const std::set<std::string>& reserved) {
    std::set<std::string> avoid = reserved;
    constants(t, avoid);
    return Printer(ctx, std::move(avoid)).go(t, kBinder);
}

std::string print_pure(const PureTerm& m, const std::vector<std::string>& ctx) {
    std::set<std::string> avoid;
    pure_constants(m, avoid);
    return PurePrinter(ctx, std::move(avoid)).go(m, kBinder);
}

std::string print_path(const Path& p) {
    if (p.empty()) return "root";
    std::string s;
    for (int i : p) s += (s.empty() ? "" : ".") + std::to_string(i);
    return s;
}

}  // namespace deltalf
