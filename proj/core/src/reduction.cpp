#include "deltalf/reduction.hpp"

#include <deque>
#include <unordered_set>

#include "deltalf/essence.hpp"

namespace deltalf {

const char* to_string(Rule r) {
    switch (r) {
    case Rule::Beta: return "beta";
    case Rule::ProjL: return "pr_l";
    case Rule::ProjR: return "pr_r";
    case Rule::InjL: return "in_l";
    case Rule::InjR: return "in_r";
    case Rule::BetaR: return "beta_r";
    case Rule::CongrInter: return "Congr_inter";
    case Rule::CongrUnion: return "Congr_union";
    }
    return "?";
}

namespace {

std::optional<Step> root_redex(const Term& t) {
    switch (t->tag) {
    case Tag::App: {
        const Term& f = t->a;
        if (f->tag == Tag::Lam) return Step{instantiate(f->b, t->b), {{}, Rule::Beta}};
        if (f->tag == Tag::CoPair && t->b->tag == Tag::InjL) return Step{mk_app(f->a, t->b->b), {{}, Rule::InjL}};
        if (f->tag == Tag::CoPair && t->b->tag == Tag::InjR) return Step{mk_app(f->b, t->b->b), {{}, Rule::InjR}};
        return std::nullopt;
    }
    case Tag::RelApp:
        if (t->a->tag == Tag::RelLam) return Step{instantiate(t->a->b, t->b), {{}, Rule::BetaR}};
        return std::nullopt;
    case Tag::ProjL:
        if (t->a->tag == Tag::Pair) return Step{t->a->a, {{}, Rule::ProjL}};
        return std::nullopt;
    case Tag::ProjR:
        if (t->a->tag == Tag::Pair) return Step{t->a->b, {{}, Rule::ProjR}};
        return std::nullopt;
    default: return std::nullopt;
    }
}

bool same_essence(const Term& x, const Term& y) {
    return pure_eq(eta_normalize(essence(x)), eta_normalize(essence(y)));
}

Rule congr_rule(const Term& t) { return t->tag == Tag::Pair ? Rule::CongrInter : Rule::CongrUnion; }

void collect(const Term& t, std::vector<Step>& out) {
    if (auto s = root_redex(t)) out.push_back(std::move(*s));
    if (t->tag == Tag::Pair || t->tag == Tag::CoPair) {
        std::vector<Step> left, right;
        collect(t->a, left);
        if (left.empty()) return;
        collect(t->b, right);
        for (auto& l : left)
            for (auto& r : right)
                if (same_essence(l.term, r.term))
                    out.push_back(Step{rebuild(t, l.term, r.term), {{}, congr_rule(t)}});
        return;
    }
    int n = arity(t->tag);
    for (int i = 0; i < n; ++i) {
        std::vector<Step> sub;
        collect(child(t, i), sub);
        for (auto& s : sub) {
            Term rebuilt = i == 0 ? rebuild(t, s.term, t->b) : rebuild(t, t->a, s.term);
            s.redex.path.insert(s.redex.path.begin(), i);
            out.push_back(Step{std::move(rebuilt), std::move(s.redex)});
        }
    }
}

std::optional<Step> leftmost(const Term& t);

std::optional<Step> parallel(const Term& t) {
    auto l = leftmost(t->a);
    if (!l) return std::nullopt;
    auto r = leftmost(t->b);
    if (!r) return std::nullopt;
    if (same_essence(l->term, r->term)) return Step{rebuild(t, l->term, r->term), {{}, congr_rule(t)}};
    std::vector<Step> left, right;
    collect(t->a, left);
    collect(t->b, right);
    for (auto& ls : left)
        for (auto& rs : right)
            if (same_essence(ls.term, rs.term)) return Step{rebuild(t, ls.term, rs.term), {{}, congr_rule(t)}};
    return std::nullopt;
}

std::optional<Step> leftmost(const Term& t) {
    if (auto s = root_redex(t)) return s;
    if (t->tag == Tag::Pair || t->tag == Tag::CoPair) return parallel(t);
    int n = arity(t->tag);
    for (int i = 0; i < n; ++i) {
        if (auto s = leftmost(child(t, i))) {
            s->term = i == 0 ? rebuild(t, s->term, t->b) : rebuild(t, t->a, s->term);
            s->redex.path.insert(s->redex.path.begin(), i);
            return s;
        }
    }
    return std::nullopt;
}

using TermSet = std::unordered_set<Term, TermHash, TermEq>;

// Terms reachable from `start`, stopping early once `limit` are known.
TermSet reachable(const Term& start, std::size_t limit) {
    TermSet seen{start};
    std::deque<Term> queue{start};
    while (!queue.empty() && seen.size() < limit) {
        Term cur = queue.front();
        queue.pop_front();
        for (auto& r : one_step_reducts(cur))
            if (seen.insert(r).second) queue.push_back(r);
    }
    return seen;
}

bool joinable(const Term& u, const Term& v, std::int64_t fuel) {
    if (alpha_eq(normalize(u, fuel), normalize(v, fuel))) return true;
    constexpr std::size_t kLimit = 4000;
    TermSet from_u = reachable(u, kLimit);
    TermSet seen{v};
    std::deque<Term> queue{v};
    while (!queue.empty() && seen.size() < kLimit) {
        Term cur = queue.front();
        queue.pop_front();
        if (from_u.count(cur)) return true;
        for (auto& r : one_step_reducts(cur))
            if (seen.insert(r).second) queue.push_back(r);
    }
    for (auto& w : seen)
        if (from_u.count(w)) return true;
    return false;
}

}  // namespace

std::vector<Step> one_step(const Term& t) {
    std::vector<Step> out;
    collect(t, out);
    return out;
}

std::vector<Term> one_step_reducts(const Term& t) {
    std::vector<Term> out;
    TermSet seen;
    for (auto& s : one_step(t))
        if (seen.insert(s.term).second) out.push_back(s.term);
    return out;
}

std::optional<Step> step_leftmost(const Term& t) { return leftmost(t); }

Term normalize(const Term& t, std::int64_t fuel, const TraceFn& trace) {
    Term cur = t;
    for (std::int64_t used = 0;; ++used) {
        auto s = leftmost(cur);
        if (!s) return cur;
        if (used >= fuel) throw OutOfFuel("normalization exceeded " + std::to_string(fuel) + " steps");
        if (trace) trace(*s);
        cur = std::move(s->term);
    }
}

bool def_eq(const Term& a, const Term& b, std::int64_t fuel) {
    if (alpha_eq(a, b)) return true;
    return alpha_eq(normalize(a, fuel), normalize(b, fuel));
}

bool check_local_confluence(const Term& t, std::int64_t fuel) {
    auto reducts = one_step_reducts(t);
    for (std::size_t i = 0; i < reducts.size(); ++i)
        for (std::size_t j = i + 1; j < reducts.size(); ++j)
            if (!joinable(reducts[i], reducts[j], fuel)) return false;
    return true;
}

}  // namespace deltalf
