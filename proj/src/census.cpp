#include "hmix/census.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <thread>

#include "json.hpp"

#include "hmix/error.hpp"

namespace hmix {

namespace {

std::vector<PairState> pair_states(int mu)
{
    std::vector<PairState> states{{mu, 0, 0}};
    for (int d = mu - 1; d >= 0; --d)
        states.push_back({d, mu - d, 0});
    for (int d = mu - 1; d >= 0; --d)
        states.push_back({d, 0, mu - d});
    return states;
}

void require_undirected(const MixedMultigraph& g)
{
    for (const auto& [key, st] : g.pairs())
        if (st.fwd || st.bwd)
            throw Error("census input must be an undirected multigraph");
}

// Runs fn(i) for i in [0, count) on up to `threads` workers; results land in index order.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned threads, const std::function<T(std::size_t)>& fn)
{
    std::vector<T> out(count);
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += threads)
                    out[i] = fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

template <typename Key>
std::vector<GraphClass> group(const std::vector<Key>& keys, const std::vector<std::string>& texts)
{
    std::map<Key, GraphClass> by_key;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        auto [it, fresh] = by_key.try_emplace(keys[i]);
        GraphClass& cls = it->second;
        if (fresh || texts[i] < texts[cls.representative])
            cls.representative = i;
        cls.members.push_back(i);
    }
    std::vector<GraphClass> out;
    out.reserve(by_key.size());
    for (auto& [key, cls] : by_key)
        out.push_back(std::move(cls));
    return out;
}

std::vector<std::string> serialize_all(const std::vector<MixedMultigraph>& family, unsigned threads)
{
    return parallel_map<std::string>(family.size(), threads,
                                     [&](std::size_t i) { return serialize_mmg(family[i]); });
}

std::vector<GraphClass> switching_partition(const std::vector<MixedMultigraph>& family,
                                            const std::vector<std::string>& texts, unsigned threads)
{
    auto keys = parallel_map<SwitchingSignature>(family.size(), threads,
                                                 [&](std::size_t i) { return switching_class_key(family[i]); });
    auto classes = group(keys, texts);
    std::sort(classes.begin(), classes.end(), [&](const GraphClass& a, const GraphClass& b) {
        return texts[a.representative] < texts[b.representative];
    });
    return classes;
}

} // namespace

std::vector<MixedMultigraph> enumerate_mixed(const MixedMultigraph& g, CensusLimits limits)
{
    require_undirected(g);
    std::vector<PairKey> keys;
    std::vector<std::vector<PairState>> options;
    for (const auto& [key, st] : g.pairs()) {
        if (st.und > limits.max_multiplicity)
            throw CapacityError("pair multiplicity " + std::to_string(st.und) + " exceeds " +
                                std::to_string(limits.max_multiplicity));
        keys.push_back(key);
        options.push_back(pair_states(st.und));
    }
    if (count_mixed(g) > limits.max_states)
        throw CapacityError("census of " + count_mixed(g).str() + " graphs exceeds cap " +
                            std::to_string(limits.max_states));

    std::vector<MixedMultigraph> out;
    std::vector<std::size_t> idx(keys.size(), 0);
    while (true) {
        MixedMultigraph m(g.order());
        for (std::size_t p = 0; p < keys.size(); ++p)
            m.set_pair(keys[p], options[p][idx[p]]);
        out.push_back(std::move(m));
        std::size_t p = keys.size();
        while (p > 0) {
            --p;
            if (++idx[p] < options[p].size())
                break;
            idx[p] = 0;
            if (p == 0)
                return out;
        }
        if (keys.empty())
            return out;
    }
}

BigInt count_mixed(const MixedMultigraph& g)
{
    BigInt total = 1;
    for (const auto& [key, st] : g.pairs())
        total *= 2 * st.multiplicity() + 1;
    return total;
}

long long cyclomatic(const MixedMultigraph& g)
{
    if (!g.connected())
        throw DisconnectedError();
    return g.size() - g.order() + 1;
}

BigInt class_bound(long long k)
{
    if (k < 1)
        throw Error("class bound needs k >= 1");
    BigInt six = boost::multiprecision::pow(BigInt(6), static_cast<unsigned>(k));
    BigInt two = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(k - 1));
    return six / 2 + two;
}

std::vector<GraphClass> switching_classes(const std::vector<MixedMultigraph>& family, unsigned threads)
{
    return switching_partition(family, serialize_all(family, threads), threads);
}

std::vector<GraphClass> cospectral_classes(const std::vector<MixedMultigraph>& family, unsigned threads)
{
    auto texts = serialize_all(family, threads);
    auto polys = parallel_map<CharPoly>(family.size(), threads, [&](std::size_t i) { return char_poly(family[i]); });
    return group(polys, texts);
}

CensusReport census_report(const MixedMultigraph& g, CensusLimits limits)
{
    require_undirected(g);
    CensusReport r;
    r.underlying = serialize_mmg(g);
    r.n = g.order();
    r.m = g.size();
    r.k = cyclomatic(g);

    const auto family = enumerate_mixed(g, limits);
    const auto texts = serialize_all(family, limits.threads);
    const auto polys =
        parallel_map<CharPoly>(family.size(), limits.threads, [&](std::size_t i) { return char_poly(family[i]); });
    const auto sw = switching_partition(family, texts, limits.threads);
    const auto co = group(polys, texts);

    r.total = family.size();
    r.n_s = sw.size();
    r.n_c = co.size();
    const SpanningTreeInfo tree = spanning_tree(g);
    for (const auto& cls : sw) {
        const CharPoly& rep_poly = polys[cls.representative];
        for (std::size_t i : cls.members)
            if (polys[i] != rep_poly)
                r.refines = false;
        r.switching_classes.push_back({texts[cls.representative],
                                       to_string(essential_vector(family[cls.representative], tree)),
                                       cls.members.size(), rep_poly});
    }
    for (const auto& cls : co)
        r.cospectral_classes.push_back({polys[cls.representative], cls.members.size()});

    if (r.k >= 1) {
        r.bound = class_bound(r.k);
        r.bound_holds = r.n_c <= r.n_s && BigInt(r.n_s) <= *r.bound;
    }
    return r;
}

std::string to_json(const CensusReport& r, int indent)
{
    using json = nlohmann::ordered_json;
    json j;
    j["underlying"] = r.underlying;
    j["n"] = r.n;
    j["m"] = r.m;
    j["k"] = r.k;
    j["total"] = r.total;
    j["n_s"] = r.n_s;
    j["n_c"] = r.n_c;
    if (r.bound) {
        if (*r.bound <= std::numeric_limits<long long>::max())
            j["bound"] = static_cast<long long>(*r.bound);
        else
            j["bound"] = r.bound->str();
    } else {
        j["bound"] = nullptr;
    }
    j["bound_holds"] = r.bound_holds;
    j["refines"] = r.refines;
    json sw = json::array();
    for (const auto& c : r.switching_classes)
        sw.push_back({{"representative", c.representative},
                      {"essential_vector", c.essential_vector},
                      {"size", c.size},
                      {"charpoly", c.charpoly.to_string()}});
    j["switching_classes"] = std::move(sw);
    json co = json::array();
    for (const auto& c : r.cospectral_classes)
        co.push_back({{"charpoly", c.charpoly.to_string()}, {"members", c.members}});
    j["cospectral_classes"] = std::move(co);
    return j.dump(indent);
}

} // namespace hmix
