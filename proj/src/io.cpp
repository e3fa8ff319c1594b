#include "bexsam/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bexsam {

using ordered_json = nlohmann::ordered_json;

std::string model_to_json(const BexsamModel& model) {
    ordered_json j;
    j["d"] = model.d;
    j["order"] = model.order;
    ordered_json noise = ordered_json::object();
    ordered_json functions = ordered_json::object();
    for (VarLabel v = 0; v < model.d; ++v) {
        noise[std::to_string(v)] = model.noise[v];
        ordered_json f;
        f["parents"] = model.functions[v].parents;
        f["table"] = model.functions[v].table;
        functions[std::to_string(v)] = std::move(f);
    }
    j["noise"] = std::move(noise);
    j["functions"] = std::move(functions);
    return j.dump(2) + "\n";
}

BexsamModel model_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("model file is not valid JSON: ") + e.what());
    }
    try {
        BexsamModel model;
        model.d = j.at("d").get<int>();
        model.order = j.at("order").get<std::vector<VarLabel>>();
        model.noise.resize(model.d);
        model.functions.resize(model.d);
        for (VarLabel v = 0; v < model.d; ++v) {
            const std::string key = std::to_string(v);
            model.noise[v] = j.at("noise").at(key).get<double>();
            const auto& f = j.at("functions").at(key);
            model.functions[v].parents = f.at("parents").get<std::vector<VarLabel>>();
            model.functions[v].table = f.at("table").get<std::vector<std::uint8_t>>();
        }
        return model;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("model file is incomplete or malformed: ") + e.what());
    }
}

std::string dataset_to_csv(const Dataset& data) {
    std::ostringstream os;
    for (int c = 0; c < data.width(); ++c) {
        os << (c ? "," : "") << 'v' << data.labels[c];
    }
    os << '\n';
    for (const auto& row : data.rows) {
        for (int c = 0; c < data.width(); ++c) {
            os << (c ? "," : "") << static_cast<int>(row[c]);
        }
        os << '\n';
    }
    return os.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) fields.push_back(field);
    return fields;
}

}  // namespace

Dataset dataset_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw DataError("empty data set file");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    Dataset data;
    int col = 0;
    for (const std::string& name : split_csv_line(line)) {
        try {
            const size_t off = name.empty() ? 0 : (name[0] == 'v' ? 1 : 0);
            data.labels.push_back(std::stoi(name.substr(off)));
        } catch (const std::exception&) {
            throw DataError("header column " + std::to_string(col) +
                            " is not a variable name: '" + name + "'");
        }
        ++col;
    }

    int row_no = 1;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (static_cast<int>(fields.size()) != data.width()) {
            throw DataError("row " + std::to_string(row_no) + " has " +
                            std::to_string(fields.size()) + " cells, expected " +
                            std::to_string(data.width()));
        }
        std::vector<std::uint8_t> row(data.width());
        for (int c = 0; c < data.width(); ++c) {
            if (fields[c] == "0") {
                row[c] = 0;
            } else if (fields[c] == "1") {
                row[c] = 1;
            } else {
                throw DataError("non-binary value '" + fields[c] + "' at row " +
                                std::to_string(row_no) + ", column " + std::to_string(c));
            }
        }
        data.rows.push_back(std::move(row));
        ++row_no;
    }
    if (data.rows.empty()) throw DataError("data set file has no rows");
    return data;
}

std::string result_to_json(const DiscoveryResult& result, double ct_ms) {
    ordered_json j;
    j["order"] = result.causal_order();
    if (ct_ms >= 0.0) j["ct_ms"] = ct_ms;
    ordered_json steps = ordered_json::array();
    for (const DiscoveryStep& step : result.steps) {
        ordered_json s;
        s["target"] = step.target;
        s["mi_score"] = step.mi_score;
        s["conditioning"] = step.tt.conditioning;
        ordered_json entries = ordered_json::array();
        for (TtEntry e : step.tt.entries) {
            if (e == TtEntry::Void) {
                entries.push_back(nullptr);
            } else {
                entries.push_back(static_cast<int>(e));
            }
        }
        s["entries"] = std::move(entries);
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    return j.dump(2) + "\n";
}

DiscoveryResult result_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("result file is not valid JSON: ") + e.what());
    }
    try {
        DiscoveryResult result;
        for (const auto& s : j.at("steps")) {
            DiscoveryStep step;
            step.target = s.at("target").get<VarLabel>();
            step.mi_score = s.at("mi_score").get<double>();
            step.tt.target = step.target;
            step.tt.conditioning = s.at("conditioning").get<std::vector<VarLabel>>();
            for (const auto& e : s.at("entries")) {
                step.tt.entries.push_back(e.is_null() ? TtEntry::Void
                                                      : static_cast<TtEntry>(e.get<int>()));
            }
            result.steps.push_back(std::move(step));
        }
        return result;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("result file is incomplete or malformed: ") + e.what());
    }
}

std::string bench_to_csv(const std::vector<BenchCell>& cells) {
    std::ostringstream os;
    os << "d,n,trials,mean_FA,mean_FTT,mean_CT_ms\n";
    for (const BenchCell& c : cells) {
        os << c.d << ',' << c.n << ',' << c.trials << ','
           << c.mean_fa << ',' << c.mean_ftt << ',' << c.mean_ct_ms << '\n';
    }
    return os.str();
}

std::string confusion_to_csv(const ConfusionCounts& confusion) {
    std::ostringstream os;
    os << "true,est_directed,est_no_edge,est_undirected\n";
    const char* rows[2] = {"directed", "no_edge"};
    for (int r = 0; r < 2; ++r) {
        os << rows[r];
        for (int c = 0; c < 3; ++c) os << ',' << confusion.counts[r][c];
        os << '\n';
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace bexsam
