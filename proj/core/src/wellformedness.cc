// Copyright 2026 The qtmlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtm/wellformedness.h"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace qtm {

namespace {

constexpr int kWindowCells = 2 * kWindowRadius + 1;

std::size_t ipow(std::size_t base, int exponent) {
    std::size_t result = 1;
    for (int i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

/// Writes the `index`-th assignment of the alphabet to `cells` (in order)
/// into `window`, where window[k] holds cell k - kWindowRadius.
void fill_cells(std::string &window, const std::vector<int> &cells, std::size_t index, const std::string &alphabet) {
    for (int cell : cells) {
        window[static_cast<std::size_t>(cell + kWindowRadius)] = alphabet[index % alphabet.size()];
        index /= alphabet.size();
    }
}

Configuration window_config(const MachineSpec &spec, StateId state, const std::string &window, std::int64_t head) {
    return Configuration::make(spec, state, Tape::from_string(window, -kWindowRadius), head);
}

struct ImageTerm {
    Configuration config;
    Amplitude amplitude;
};

/// Small-vector form of U|config>; nullopt-like empty result with `defined`
/// false when no rule exists.
bool local_image(const MachineSpec &spec, const Configuration &config, std::vector<ImageTerm> &out) {
    out.clear();
    Symbol read = config.read();
    const auto *targets = spec.rule(config.state, read);
    if (targets == nullptr) {
        return false;
    }
    for (const auto &target : *targets) {
        Configuration next = Configuration::make(spec, target.next, config.tape, config.head + delta(target.move));
        if (target.write != read) {
            next.tape.write(config.head, target.write);
        }
        auto it = std::find_if(out.begin(), out.end(), [&](const ImageTerm &t) { return t.config == next; });
        if (it == out.end()) {
            out.push_back({std::move(next), target.amplitude});
        } else {
            it->amplitude += target.amplitude;
        }
    }
    return true;
}

Amplitude overlap(const std::vector<ImageTerm> &a, const std::vector<ImageTerm> &b) {
    Amplitude total;
    for (const auto &x : a) {
        for (const auto &y : b) {
            if (x.config.head == y.config.head && x.config.state == y.config.state && x.config.tape == y.config.tape) {
                total += std::conj(x.amplitude) * y.amplitude;
            }
        }
    }
    return total;
}

}  // namespace

std::size_t collision_candidate_count(std::size_t states, std::size_t symbols) {
    std::size_t keys = states * symbols;
    return ipow(symbols, kWindowCells - 1) * keys * (keys - 1) / 2 +
           static_cast<std::size_t>(kMaxHeadDistance) * ipow(symbols, kWindowCells + 2) * states * states;
}

void for_each_collision_candidate(
    const MachineSpec &spec, const std::function<void(const Configuration &, const Configuration &)> &visit) {
    const std::string &alphabet = spec.alphabet;
    std::vector<StateId> states;
    for (std::uint32_t i = 0; i < spec.states.size(); ++i) {
        states.push_back(StateId{i});
    }
    std::vector<RuleKey> keys;
    for (StateId state : states) {
        for (Symbol symbol : alphabet) {
            keys.push_back({state, symbol});
        }
    }
    auto emit = [&](Configuration a, Configuration b) {
        if (b < a) {
            std::swap(a, b);
        }
        visit(a, b);
    };

    std::string window(kWindowCells, kBlank);

    // Shared head.
    std::vector<int> others;
    for (int cell = -kWindowRadius; cell <= kWindowRadius; ++cell) {
        if (cell != 0) {
            others.push_back(cell);
        }
    }
    std::size_t assignments = ipow(alphabet.size(), static_cast<int>(others.size()));
    for (std::size_t index = 0; index < assignments; ++index) {
        fill_cells(window, others, index, alphabet);
        for (std::size_t i = 0; i < keys.size(); ++i) {
            for (std::size_t j = i + 1; j < keys.size(); ++j) {
                std::string wa = window;
                std::string wb = window;
                wa[kWindowRadius] = keys[i].symbol;
                wb[kWindowRadius] = keys[j].symbol;
                emit(window_config(spec, keys[i].state, wa, 0), window_config(spec, keys[j].state, wb, 0));
            }
        }
    }

    // Heads `distance` cells apart.
    for (int distance = 1; distance <= kMaxHeadDistance; ++distance) {
        others.clear();
        for (int cell = -kWindowRadius; cell <= kWindowRadius; ++cell) {
            if (cell != 0 && cell != distance) {
                others.push_back(cell);
            }
        }
        std::vector<int> heads = {0, distance, 0, distance};
        std::size_t shared = ipow(alphabet.size(), static_cast<int>(others.size()));
        std::size_t local = ipow(alphabet.size(), 4);
        std::size_t lower = static_cast<std::size_t>(kWindowRadius);
        std::size_t upper = static_cast<std::size_t>(kWindowRadius + distance);
        for (std::size_t index = 0; index < shared; ++index) {
            fill_cells(window, others, index, alphabet);
            for (std::size_t cells = 0; cells < local; ++cells) {
                std::string wa = window;
                std::string wb = window;
                std::size_t rest = cells;
                wa[lower] = alphabet[rest % alphabet.size()];
                rest /= alphabet.size();
                wa[upper] = alphabet[rest % alphabet.size()];
                rest /= alphabet.size();
                wb[lower] = alphabet[rest % alphabet.size()];
                rest /= alphabet.size();
                wb[upper] = alphabet[rest % alphabet.size()];
                for (StateId qa : states) {
                    for (StateId qb : states) {
                        emit(window_config(spec, qa, wa, 0), window_config(spec, qb, wb, distance));
                    }
                }
            }
        }
    }
}

std::vector<CollisionCandidatePair> collision_candidates(const MachineSpec &spec) {
    std::vector<CollisionCandidatePair> out;
    for_each_collision_candidate(spec,
                                 [&](const Configuration &a, const Configuration &b) { out.push_back({a, b}); });
    return out;
}

bool WellformednessReport::isometric_up_to_halt_drift() const {
    return norm_violations.empty() && std::all_of(witnesses.begin(), witnesses.end(), [](const auto &w) {
               return w.kind == WitnessKind::kHaltDrift;
           });
}

Amplitude image_inner_product(const MachineSpec &spec, const Configuration &a, const Configuration &b) {
    std::vector<ImageTerm> ia, ib;
    if (!local_image(spec, a, ia) || !local_image(spec, b, ib)) {
        return Amplitude();
    }
    return overlap(ia, ib);
}

WellformednessReport check_wellformed(const MachineSpec &spec, double tol) {
    WellformednessReport report;
    report.tol = tol;
    for (std::uint32_t q = 0; q < spec.states.size(); ++q) {
        for (Symbol symbol : spec.alphabet) {
            RuleKey key{StateId{q}, symbol};
            const auto *targets = spec.rule(key.state, key.symbol);
            if (targets == nullptr) {
                report.undefined_keys.push_back(key);
                continue;
            }
            // Targets are distinct basis configurations, so the image norm is
            // the row norm.
            std::vector<ImageTerm> terms;
            Configuration probe = Configuration::make(spec, key.state, Tape::from_string(std::string(1, symbol)), 0);
            local_image(spec, probe, terms);
            double norm2 = 0;
            for (const auto &term : terms) {
                norm2 += std::norm(term.amplitude);
            }
            if (std::abs(norm2 - 1.0) > tol) {
                report.norm_violations.push_back({key, norm2});
            }
        }
    }

    std::vector<ImageTerm> ia, ib;
    for_each_collision_candidate(spec, [&](const Configuration &a, const Configuration &b) {
        ++report.candidate_count;
        if (!local_image(spec, a, ia) || !local_image(spec, b, ib)) {
            return;
        }
        Amplitude product = overlap(ia, ib);
        if (std::abs(product) > tol) {
            WitnessKind kind = a.halted == b.halted ? WitnessKind::kLocal : WitnessKind::kHaltDrift;
            report.witnesses.push_back({a, b, product, kind});
        }
    });

    auto rank = [](const OrthogonalityWitness &w) {
        return std::make_tuple(w.kind == WitnessKind::kHaltDrift, w.first.tape.non_blank_count() + w.second.tape.non_blank_count());
    };
    std::sort(report.witnesses.begin(), report.witnesses.end(), [&](const auto &x, const auto &y) {
        auto rx = rank(x);
        auto ry = rank(y);
        if (rx != ry) {
            return rx < ry;
        }
        if (auto c = x.first <=> y.first; c != 0) {
            return c < 0;
        }
        return x.second < y.second;
    });

    report.verdict = report.norm_violations.empty() && report.witnesses.empty()
                         ? WellformednessReport::Verdict::kWellFormed
                         : WellformednessReport::Verdict::kViolation;
    return report;
}

}  // namespace qtm
