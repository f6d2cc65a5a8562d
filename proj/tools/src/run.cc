// Copyright 2026 The assocmem Authors
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

#include "assocmem/cli/run.h"

#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "assocmem/analysis.h"
#include "assocmem/cli/formats.h"
#include "assocmem/generator.h"
#include "assocmem/hebbian.h"
#include "assocmem/quantum.h"

namespace assocmem::cli {

namespace {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct TrainArgs {
    std::string memories;
    std::string out;
};

struct RecallArgs {
    std::string weights;
    std::string state;
    bool async = false;
    std::string schedule = "random";
    std::optional<size_t> passes;
    std::optional<std::uint64_t> seed;
    std::string out;
};

struct SpreadArgs {
    std::string weights;
    std::string proximity;
    std::string start;
    std::string memories;
    std::string out;
};

struct FixedPointArgs {
    std::string weights;
    std::string memories;
    size_t limit = kDefaultEnumerationLimit;
    std::string out;
};

struct CapacityArgs {
    size_t n = 0;
    std::string m_list;
    size_t trials = 0;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
    std::string out;
};

struct CollapseArgs {
    std::string amps;
    std::optional<size_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> count_levels;
    bool list_cases = false;
    bool emit_samples = false;
    std::string out;
};

Json optional_json(const std::string &s) {
    return s.empty() ? Json(nullptr) : Json(s);
}

template <typename T>
Json optional_json(const std::optional<T> &v) {
    return v ? Json(*v) : Json(nullptr);
}

Json make_report(std::string_view command, Json config, std::optional<std::uint64_t> seed, Json result) {
    Json j;
    j["tool"] = {{"name", kToolName}, {"version", tool_version()}};
    j["command"] = command;
    j["config"] = std::move(config);
    j["seed"] = optional_json(seed);
    j["result"] = std::move(result);
    return j;
}

void emit(const Json &j, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << dump(j);
    } else {
        write_file(path, dump(j));
    }
}

Json optional_index_json(const std::optional<size_t> &zero_based) {
    return zero_based ? Json(*zero_based + 1) : Json(nullptr);
}

// ---------------------------------------------------------------------------
// Commands

void cmd_train(const TrainArgs &a) {
    MemorySet set = parse_memories(a.memories);
    InterconnectionMatrix weights = train(set);
    Json dups = Json::array();
    for (auto [i, j] : set.duplicates) {
        dups.push_back({i + 1, j + 1});
    }
    Json provenance = {
        {"command", "train"},
        {"config", {{"memories", a.memories}, {"out", a.out}}},
        {"seed", nullptr},
        {"memory_count", set.m()},
        {"duplicate_memories", dups},
    };
    write_file(a.out, dump(weights_to_json(weights, provenance)));
}

void cmd_recall(const RecallArgs &a, std::ostream &out) {
    InterconnectionMatrix weights = parse_weights(a.weights);
    BipolarVector x = parse_state(a.state);
    require_same_size(weights.size(), x.size(), "recall");

    Json config = {
        {"weights", a.weights},
        {"state", state_json(x)},
        {"async", a.async},
        {"schedule", a.async ? Json(a.schedule) : Json(nullptr)},
        {"passes", a.passes ? *a.passes : 10 * weights.size()},
        {"out", optional_json(a.out)},
    };
    Json result;
    result["start_is_stored"] = is_stored(weights, x);
    result["single_pass"] = state_json(recall_sync(weights, x));
    result["start_energy"] = energy(weights, x);

    std::optional<std::uint64_t> seed;
    if (a.async) {
        AsyncOptions options;
        if (a.schedule == "random") {
            if (!a.seed) {
                throw UsageError("recall --async --schedule random requires --seed");
            }
            options.schedule = Schedule::kRandomPermutation;
            options.seed = *a.seed;
            seed = a.seed;
        } else {
            options.schedule = Schedule::kCyclic;
        }
        options.max_passes = a.passes;
        RecallResult r = recall_async(weights, x, options);
        result["mode"] = "async";
        result["final_state"] = state_json(r.state);
        result["converged"] = r.converged;
        result["passes"] = r.iterations;
        result["final_energy"] = r.energy_trace.back();
        result["energy_trace"] = r.energy_trace;
    } else {
        SyncTrajectory t = recall_sync_iterated(weights, x, a.passes);
        result["mode"] = "sync";
        result["final_state"] = state_json(t.state);
        result["converged"] = t.converged;
        result["passes"] = t.passes;
        result["final_energy"] = energy(weights, t.state);
        Json cycle = Json::array();
        for (const auto &c : t.cycle) {
            cycle.push_back(state_json(c));
        }
        result["cycle"] = cycle;
    }
    emit(make_report("recall", config, seed, result), a.out, out);
}

void cmd_spread(const SpreadArgs &a, std::ostream &out) {
    InterconnectionMatrix weights = parse_weights(a.weights);
    const size_t n = weights.size();
    StartAssignment start = parse_start(a.start, n);
    ProximityMatrix proximity = a.proximity.empty() ? ProximityMatrix::uniform(n) : parse_proximity(a.proximity);
    require_same_size(n, proximity.size(), "spread (proximity)");
    std::vector<BipolarVector> memories;
    if (!a.memories.empty()) {
        memories = parse_memories(a.memories).memories;
        require_same_size(n, memories.front().size(), "spread (memories)");
    }

    RetrievalReport report = retrieve_report(weights, proximity, start, memories);
    const SpreadTrace &trace = report.trace;

    Json start_json = Json::array();
    for (const auto &nv : start) {
        start_json.push_back({{"neuron", nv.neuron + 1}, {"value", int{nv.value}}});
    }
    Json config = {
        {"weights", a.weights},
        {"proximity", optional_json(a.proximity)},
        {"start", start_json},
        {"memories", optional_json(a.memories)},
        {"out", optional_json(a.out)},
    };

    std::vector<size_t> perm(trace.order.permutation().begin(), trace.order.permutation().end());
    Json steps = Json::array();
    for (const auto &s : trace.steps) {
        steps.push_back({{"neuron", s.neuron + 1}, {"field", s.field}, {"value", int{s.value}}});
    }
    Json result;
    result["order"] = neuron_list_json(perm);
    result["start_set"] = neuron_list_json(trace.order.start_set());
    result["steps"] = steps;
    result["final_state"] = state_json(trace.final_state);
    result["consistency_flags"] = neuron_list_json(trace.consistency_flags);
    result["fixed_point"] = report.fixed_point;
    if (memories.empty()) {
        result["matched_memory"] = nullptr;
        result["matched_complement"] = nullptr;
        result["nearest_memory"] = nullptr;
        result["nearest_distance"] = nullptr;
    } else {
        result["matched_memory"] = optional_index_json(report.matched_memory);
        result["matched_complement"] = optional_index_json(report.matched_complement);
        result["nearest_memory"] = report.nearest_memory + 1;
        result["nearest_distance"] = report.nearest_distance;
    }
    emit(make_report("spread", config, std::nullopt, result), a.out, out);
}

void cmd_fixed_points(const FixedPointArgs &a, std::ostream &out) {
    InterconnectionMatrix weights = parse_weights(a.weights);
    std::vector<BipolarVector> memories;
    if (!a.memories.empty()) {
        memories = parse_memories(a.memories).memories;
        require_same_size(weights.size(), memories.front().size(), "fixed-points (memories)");
    }
    auto fps = enumerate_fixed_points(weights, a.limit);
    AttractorCensus census = classify(fps, memories);

    Json config = {
        {"weights", a.weights},
        {"memories", optional_json(a.memories)},
        {"limit", a.limit},
        {"out", optional_json(a.out)},
    };
    Json list = Json::array();
    for (const auto &item : census.fixed_points) {
        list.push_back({{"state", state_json(item.state)},
                        {"kind", to_string(item.kind)},
                        {"memory", optional_index_json(item.memory_index)}});
    }
    Json result;
    result["n"] = weights.size();
    result["count"] = fps.size();
    result["fixed_points"] = list;
    result["census"] = {
        {"stored", census.stored_count},
        {"complement", census.complement_count},
        {"spurious", census.spurious_count},
    };
    if (memories.empty()) {
        result["complement_probe"] = nullptr;
    } else {
        ComplementProbe probe = complement_asymmetry_probe(weights, memories);
        Json failures = Json::array();
        for (const auto &f : probe.failures) {
            failures.push_back({{"memory", f.memory_index + 1},
                                {"zero_field_components", neuron_list_json(f.zero_field_components)}});
        }
        result["complement_probe"] = {
            {"stored_memories", neuron_list_json(probe.stored_memories)},
            {"failures", failures},
        };
    }
    emit(make_report("fixed-points", config, std::nullopt, result), a.out, out);
}

void cmd_capacity(const CapacityArgs &a, std::ostream &out) {
    if (!a.seed) {
        throw UsageError("capacity requires --seed");
    }
    CapacityOptions options;
    options.n = a.n;
    options.m_values = parse_count_list(a.m_list);
    options.trials = a.trials;
    options.seed = *a.seed;
    options.threads = a.threads;
    CapacityReport report = capacity_experiment(options);

    // Thread count is omitted: it cannot change the result.
    Json config = {
        {"n", a.n},
        {"m_values", options.m_values},
        {"trials", a.trials},
        {"out", optional_json(a.out)},
    };
    Json rows = Json::array();
    for (const auto &r : report.rows) {
        rows.push_back({
            {"m", r.m},
            {"load", static_cast<double>(r.m) / static_cast<double>(report.n)},
            {"trials", r.trials},
            {"unstable_bits", r.unstable_bits},
            {"total_bits", r.total_bits},
            {"per_bit_instability", r.per_bit_instability},
            {"per_bit_standard_error", r.per_bit_standard_error},
            {"all_stable_trials", r.all_stable_trials},
            {"all_stable_fraction", r.all_stable_fraction},
        });
    }
    Json result;
    result["rows"] = rows;
    result["threshold_capacity_ratio"] = report.threshold_capacity_ratio;
    result["exact_threshold_capacity_ratio"] = report.exact_threshold_capacity_ratio;
    result["instability_monotone_within_2se"] = report.instability_monotone_within_noise();
    result["definitions"] = {
        {"threshold_capacity_ratio", "largest m/n in the sweep with per-bit stability >= 0.99"},
        {"exact_threshold_capacity_ratio", "largest m/n in the sweep where >= 99% of trials store every memory exactly"},
    };
    emit(make_report("capacity", config, report.seed, result), a.out, out);
}

void cmd_collapse(const CollapseArgs &a, std::ostream &out) {
    const bool sampling = !a.amps.empty();
    if (sampling == a.count_levels.has_value()) {
        throw UsageError("collapse needs exactly one of --amps or --count-levels");
    }
    if (!sampling) {
        if (a.samples || a.seed || a.emit_samples) {
            throw UsageError("--samples, --seed and --emit-samples apply only with --amps");
        }
        ReorganizationTable table = enumerate_reorganizations(*a.count_levels);
        Json config = {{"count_levels", *a.count_levels}, {"list_cases", a.list_cases}, {"out", optional_json(a.out)}};
        Json result;
        result["n_levels"] = table.n_levels;
        result["reorg_count"] = reorg_count(*a.count_levels);
        result["raw_case_count"] = table.raw_cases.size();
        result["distinct_count"] = table.distinct_count;
        result["pairing"] = "(a_i, b_j, o) ~ (a_j, b_i, 1-o); representative has outcome 0";
        if (a.list_cases) {
            result["grid"] = table.grid;
            Json cases = Json::array();
            for (const auto &c : table.cases) {
                cases.push_back({c.a_index + 1, c.b_index + 1, c.outcome});
            }
            result["cases"] = cases;
        }
        emit(make_report("collapse", config, std::nullopt, result), a.out, out);
        return;
    }

    if (a.list_cases) {
        throw UsageError("--list-cases applies only with --count-levels");
    }
    if (!a.seed) {
        throw UsageError("collapse --amps requires --seed");
    }
    if (!a.samples) {
        throw UsageError("collapse --amps requires --samples");
    }
    AmplitudeVector amps(parse_real_list(a.amps));
    auto samples = collapse_sample(amps, *a.seed, *a.samples);
    Selection selection = collapse_as_selection(amps, *a.seed);

    std::vector<std::uint64_t> counts(amps.size(), 0);
    for (size_t s : samples) {
        counts[s]++;
    }
    std::vector<double> probabilities;
    std::vector<double> frequencies;
    for (size_t i = 0; i < amps.size(); i++) {
        probabilities.push_back(amps.probability(i));
        frequencies.push_back(static_cast<double>(counts[i]) / static_cast<double>(samples.size()));
    }
    Json config = {
        {"amps", std::vector<double>(amps.amplitudes().begin(), amps.amplitudes().end())},
        {"samples", *a.samples},
        {"emit_samples", a.emit_samples},
        {"out", optional_json(a.out)},
    };
    Json result;
    result["probabilities"] = probabilities;
    result["counts"] = counts;
    result["frequencies"] = frequencies;
    result["selection"] = {
        {"index", selection.index + 1},
        {"label", selection.label},
        {"probability", selection.probability},
        {"note", selection.note},
    };
    if (a.emit_samples) {
        Json seq = Json::array();
        for (size_t s : samples) {
            seq.push_back(s + 1);
        }
        result["samples"] = seq;
    }
    emit(make_report("collapse", config, a.seed, result), a.out, out);
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"assocmem: Hebbian associative memory, generator-matrix retrieval and collapse sampling", "assocmem"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + tool_version());

    TrainArgs train_args;
    auto *train_cmd = app.add_subcommand("train", "Build the weight matrix from a memory file");
    train_cmd->add_option("--memories", train_args.memories, "Memory file")->required();
    train_cmd->add_option("--out", train_args.out, "Weight file to write")->required();

    RecallArgs recall_args;
    auto *recall_cmd = app.add_subcommand("recall", "Recall from a start state");
    recall_cmd->add_option("--weights", recall_args.weights, "Weight file")->required();
    recall_cmd->add_option("--state", recall_args.state, "Start state, e.g. 1,-1,1,1")->required();
    recall_cmd->add_flag("--async", recall_args.async, "One neuron at a time instead of synchronous passes");
    recall_cmd->add_option("--schedule", recall_args.schedule, "Async update order")
        ->check(CLI::IsMember({"random", "cyclic"}))
        ->capture_default_str();
    recall_cmd->add_option("--passes", recall_args.passes, "Maximum passes (default 10*n)");
    recall_cmd->add_option("--seed", recall_args.seed, "Seed for the random schedule");
    recall_cmd->add_option("--out", recall_args.out, "Report file (default stdout)");

    SpreadArgs spread_args;
    auto *spread_cmd = app.add_subcommand("spread", "Generator-matrix retrieval from a fragment");
    spread_cmd->add_option("--weights", spread_args.weights, "Weight file")->required();
    spread_cmd->add_option("--proximity", spread_args.proximity, "Proximity file (default: uniform distances)");
    spread_cmd->add_option("--start", spread_args.start, "Start fragment, e.g. 1:+1,4:-1 (1-based)")->required();
    spread_cmd->add_option("--memories", spread_args.memories, "Memory file for match reporting");
    spread_cmd->add_option("--out", spread_args.out, "Report file (default stdout)");

    FixedPointArgs fp_args;
    auto *fp_cmd = app.add_subcommand("fixed-points", "Enumerate and classify all fixed points");
    fp_cmd->add_option("--weights", fp_args.weights, "Weight file")->required();
    fp_cmd->add_option("--memories", fp_args.memories, "Memory file for classification");
    fp_cmd->add_option("--limit", fp_args.limit, "Largest n to enumerate")->capture_default_str();
    fp_cmd->add_option("--out", fp_args.out, "Report file (default stdout)");

    CapacityArgs cap_args;
    auto *cap_cmd = app.add_subcommand("capacity", "Monte Carlo capacity sweep");
    cap_cmd->add_option("--n", cap_args.n, "Neuron count")->required();
    cap_cmd->add_option("--m-list", cap_args.m_list, "Memory counts, e.g. 5,10,15 or 5:40:5")->required();
    cap_cmd->add_option("--trials", cap_args.trials, "Trials per memory count")->required();
    cap_cmd->add_option("--seed", cap_args.seed, "RNG seed");
    cap_cmd->add_option("--threads", cap_args.threads, "Worker threads (0 = all cores); does not affect results")
        ->capture_default_str();
    cap_cmd->add_option("--out", cap_args.out, "Report file (default stdout)");

    CollapseArgs col_args;
    auto *col_cmd = app.add_subcommand("collapse", "Born-rule sampling or reorganization counting");
    col_cmd->add_option("--amps", col_args.amps, "Real amplitudes, e.g. 0.6,0.8");
    col_cmd->add_option("--samples", col_args.samples, "Number of draws");
    col_cmd->add_option("--seed", col_args.seed, "RNG seed");
    col_cmd->add_option("--count-levels", col_args.count_levels, "Amplitude grid resolution");
    col_cmd->add_flag("--list-cases", col_args.list_cases, "Include the distinct cases");
    col_cmd->add_flag("--emit-samples", col_args.emit_samples, "Include the full sample sequence");
    col_cmd->add_option("--out", col_args.out, "Report file (default stdout)");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*train_cmd) {
            cmd_train(train_args);
        } else if (*recall_cmd) {
            cmd_recall(recall_args, out);
        } else if (*spread_cmd) {
            cmd_spread(spread_args, out);
        } else if (*fp_cmd) {
            cmd_fixed_points(fp_args, out);
        } else if (*cap_cmd) {
            cmd_capacity(cap_args, out);
        } else if (*col_cmd) {
            cmd_collapse(col_args, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DimensionMismatch &e) {
        err << "dimension error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const IoError &e) {
        err << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument &e) {
        err << "invalid parameter: " << e.what() << "\n";
        return kExitParameter;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace assocmem::cli
