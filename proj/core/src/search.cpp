/*
* Copyright 2026 The hermspread authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#include "hermspread/search.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace hermspread {

namespace {

std::uint64_t starter_hash(const StarterConfig& s, std::uint64_t h)
{
    h = fnv1a64_span(s.included, h);
    return fnv1a64_span(s.excluded.words(), h);
}

std::uint64_t starters_hash(const std::vector<StarterConfig>& starters)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& s : starters)
        h = starter_hash(s, h);
    return h;
}

std::string hex64(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

std::vector<StarterConfig> generate_starters(const UnitalGeometry& g, const PermGroup& grp,
                                             int max_starters)
{
    check(max_starters >= 1, "starter limit must be positive");
    const int ns = g.num_secants();
    const int m = g.spread_size();

    StarterConfig init;
    init.included = {std::uint16_t(g.secant_100())};
    init.excluded = Bitset(ns);

    std::deque<StarterConfig> frontier{init};
    std::vector<StarterConfig> done;

    while (!frontier.empty()) {
        if (int(done.size() + frontier.size()) >= max_starters)
            break;
        StarterConfig st = std::move(frontier.front());
        frontier.pop_front();
        if (int(st.included.size()) == m) {
            done.push_back(std::move(st));
            continue;
        }
        PermGroup stab = grp.setwise_stabilizer(st.included);
        if (stab.order() == 1) {
            done.push_back(std::move(st));
            continue;
        }

        // Secants blockwise disjoint from the whole partial spread.
        Bitset compat(ns);
        compat.set_all();
        for (std::uint16_t s : st.included)
            compat &= g.disjoint_row(s);
        std::vector<int> domain;
        for (int t = compat.find_first(); t >= 0; t = compat.find_next(t))
            domain.push_back(t);

        auto orbs = stab.orbits(domain);
        // Orbits touching the exclusion set are dropped wholesale: any spread
        // using one of their secants is isomorphic to a spread met elsewhere.
        std::vector<std::vector<int>> viable;
        Bitset dropped(ns);
        for (auto& o : orbs) {
            bool touches = false;
            for (int t : o)
                if (st.excluded.test(t)) {
                    touches = true;
                    break;
                }
            if (touches)
                for (int t : o)
                    dropped.set(t);
            else
                viable.push_back(std::move(o));
        }
        if (viable.empty()) {
            done.push_back(std::move(st));
            continue;
        }

        // Child j keeps orbit j's representative and excludes all later orbits.
        std::vector<Bitset> suffix(viable.size() + 1, Bitset(ns));
        for (std::size_t k = viable.size(); k-- > 0;) {
            suffix[k] = suffix[k + 1];
            for (int t : viable[k])
                suffix[k].set(t);
        }
        for (std::size_t j = 0; j < viable.size(); ++j) {
            StarterConfig child;
            child.included = st.included;
            child.included.push_back(std::uint16_t(viable[j].front()));
            std::sort(child.included.begin(), child.included.end());
            child.excluded = st.excluded;
            child.excluded |= dropped;
            child.excluded |= suffix[j + 1];
            frontier.push_back(std::move(child));
        }
    }
    for (auto& st : frontier)
        done.push_back(std::move(st));
    return done;
}

std::vector<Spread> backtrack_search(const UnitalGeometry& g, const StarterConfig& starter)
{
    const int ns = g.num_secants();
    const int nu = g.num_unital_points();
    const int m = g.spread_size();
    const int blocksz = g.q() + 1;

    check(std::binary_search(starter.included.begin(), starter.included.end(),
                             std::uint16_t(g.secant_100())),
          "starter must contain the secant [1,0,0]");
    for (std::uint16_t s : starter.included)
        check(!starter.excluded.test(s), "starter includes an excluded secant");

    Bitset covered0(nu);
    std::size_t pts = 0;
    for (std::uint16_t s : starter.included) {
        covered0 |= g.block_bits(s);
        pts += blocksz;
    }
    check(covered0.count() == pts, "starter blocks are not pairwise disjoint");

    Bitset cand0(ns);
    cand0.set_all();
    for (std::uint16_t s : starter.included)
        cand0 &= g.disjoint_row(s);
    for (int t = starter.excluded.find_first(); t >= 0; t = starter.excluded.find_next(t))
        cand0.reset(t);

    const int depth_max = m - int(starter.included.size());
    std::vector<Bitset> covered(depth_max + 1), cand(depth_max + 1);
    covered[0] = std::move(covered0);
    cand[0] = std::move(cand0);

    std::vector<Spread> out;
    std::vector<std::uint16_t> chosen = starter.included;

    auto rec = [&](auto&& self, int depth) -> void {
        int pivot = covered[depth].find_first_zero();
        if (pivot < 0) {
            std::vector<std::uint16_t> lines = chosen;
            std::sort(lines.begin(), lines.end());
            validate_spread(g, lines);
            out.push_back(Spread{std::move(lines)});
            return;
        }
        if (depth == depth_max)
            return;
        for (int s : g.secants_through_unital(pivot)) {
            if (!cand[depth].test(s))
                continue;
            covered[depth + 1] = covered[depth];
            covered[depth + 1] |= g.block_bits(s);
            cand[depth + 1] = cand[depth];
            cand[depth + 1] &= g.disjoint_row(s);
            chosen.push_back(std::uint16_t(s));
            self(self, depth + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Spread> exhaustive_reference_search(const UnitalGeometry& g)
{
    check(g.q() <= 4, "exhaustive reference search is limited to q <= 4");
    StarterConfig init;
    init.included = {std::uint16_t(g.secant_100())};
    init.excluded = Bitset(g.num_secants());
    return backtrack_search(g, init);
}

std::vector<Spread> SearchOutcome::merged() const
{
    std::vector<Spread> all;
    for (const auto& v : per_starter)
        all.insert(all.end(), v.begin(), v.end());
    return all;
}

// ---------------------------------------------------------------------------
// checkpointing

namespace {

std::string spread_tokens(const UnitalGeometry& g, const std::vector<std::uint16_t>& lines)
{
    std::string s;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i)
            s += '|';
        s += g.line_token(g.secant_line(lines[i]));
    }
    return s;
}

std::vector<std::uint16_t> parse_spread_tokens(const UnitalGeometry& g, const std::string& s)
{
    std::vector<std::uint16_t> lines;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '|')) {
        int si = g.secant_index(g.parse_line_token(tok));
        check(si >= 0, "checkpoint spread line is not a secant");
        lines.push_back(std::uint16_t(si));
    }
    std::sort(lines.begin(), lines.end());
    return lines;
}

std::string starter_record(const UnitalGeometry& g, int idx, const StarterConfig& st,
                           bool record_done, const std::vector<Spread>& spreads)
{
    std::string line = "starter " + std::to_string(idx);
    line += " si=" + spread_tokens(g, st.included);
    line += " se=" + std::to_string(st.excluded.count()) + ":" +
            hex64(fnv1a64_span(st.excluded.words()));
    line += record_done ? " status=done" : " status=pending";
    line += " spreads=";
    for (std::size_t i = 0; i < spreads.size(); ++i) {
        if (i)
            line += ';';
        line += spread_tokens(g, spreads[i].lines);
    }
    return line;
}

struct CheckpointState {
    std::vector<bool> done;
    std::vector<std::vector<Spread>> results;
};

CheckpointState load_checkpoint(const UnitalGeometry& g, const std::string& path,
                                const std::vector<StarterConfig>& starters)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open checkpoint file " + path);
    std::string header;
    std::getline(in, header);
    std::string expect = "hermspread-checkpoint v1 q=" + std::to_string(g.q()) +
                         " secants=" + std::to_string(g.num_secants()) +
                         " starters=" + std::to_string(starters.size()) +
                         " hash=" + hex64(starters_hash(starters));
    if (header != expect)
        throw ConfigError("checkpoint/version mismatch in " + path);

    CheckpointState st;
    st.done.assign(starters.size(), false);
    st.results.resize(starters.size());
    std::string line;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::stringstream ss(line);
        std::string word;
        ss >> word;
        if (word != "starter")
            throw ConfigError("checkpoint line " + std::to_string(lineno) + ": bad record");
        std::size_t idx;
        ss >> idx;
        if (!ss || idx >= starters.size())
            throw ConfigError("checkpoint line " + std::to_string(lineno) + ": bad index");
        std::string si, se, status, spreads;
        ss >> si >> se >> status;
        std::getline(ss, spreads);
        // Validate the starter identity so a stale file cannot be resumed.
        std::string want = starter_record(g, int(idx), starters[idx], false, {});
        std::string have = "starter " + std::to_string(idx) + " " + si + " " + se +
                           " status=pending spreads=";
        if (want != have)
            throw ConfigError("checkpoint line " + std::to_string(lineno) +
                              ": starter does not match this run");
        if (status == "status=done") {
            st.done[idx] = true;
            auto& res = st.results[idx];
            res.clear();
            std::string body = spreads;
            auto pos = body.find("spreads=");
            if (pos == std::string::npos)
                throw ConfigError("checkpoint line " + std::to_string(lineno) + ": bad record");
            body = body.substr(pos + 8);
            if (!body.empty()) {
                std::stringstream sb(body);
                std::string one;
                while (std::getline(sb, one, ';'))
                    res.push_back(Spread{parse_spread_tokens(g, one)});
            }
        } else if (status != "status=pending") {
            throw ConfigError("checkpoint line " + std::to_string(lineno) + ": bad status");
        }
    }
    return st;
}

} // namespace

SearchOutcome run_starters(const UnitalGeometry& g, const std::vector<StarterConfig>& starters,
                           int workers, const std::string& checkpoint_path, bool resume)
{
    SearchOutcome outcome;
    outcome.per_starter.resize(starters.size());
    std::vector<bool> skip(starters.size(), false);

    std::ofstream ckpt;
    std::mutex ckpt_mutex;
    if (!checkpoint_path.empty()) {
        bool have_old = false;
        if (resume) {
            std::ifstream probe(checkpoint_path);
            have_old = probe.good();
        }
        if (have_old) {
            CheckpointState st = load_checkpoint(g, checkpoint_path, starters);
            skip = st.done;
            for (std::size_t i = 0; i < starters.size(); ++i)
                if (st.done[i])
                    outcome.per_starter[i] = std::move(st.results[i]);
            ckpt.open(checkpoint_path, std::ios::app);
        } else {
            ckpt.open(checkpoint_path, std::ios::trunc);
            check(bool(ckpt), "cannot write checkpoint file " + checkpoint_path);
            ckpt << "hermspread-checkpoint v1 q=" << g.q() << " secants=" << g.num_secants()
                 << " starters=" << starters.size() << " hash=" << hex64(starters_hash(starters))
                 << "\n";
            for (std::size_t i = 0; i < starters.size(); ++i)
                ckpt << starter_record(g, int(i), starters[i], false, {}) << "\n";
            ckpt.flush();
        }
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= starters.size())
                return;
            if (skip[i])
                continue;
            try {
                auto res = backtrack_search(g, starters[i]);
                if (ckpt.is_open()) {
                    std::lock_guard<std::mutex> lk(ckpt_mutex);
                    ckpt << starter_record(g, int(i), starters[i], true, res) << "\n";
                    ckpt.flush();
                }
                outcome.per_starter[i] = std::move(res);
            } catch (...) {
                std::lock_guard<std::mutex> lk(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                return;
            }
        }
    };

    int nthreads = std::max(1, workers);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t)
        pool.emplace_back(work);
    for (auto& th : pool)
        th.join();
    if (first_error)
        std::rethrow_exception(first_error);
    return outcome;
}

} // namespace hermspread
