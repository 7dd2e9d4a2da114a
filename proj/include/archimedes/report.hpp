#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "archimedes/conditions.hpp"
#include "archimedes/curvature.hpp"

namespace archimedes {

struct FamilyReport;

// Shortest-faithful decimal formatting via %.17g; identical configs
// serialize to byte-identical reports.
std::string format_double(double v);

// Minimal ordered JSON emitter. Field order is insertion order, floats are
// 17-significant-digit, so output is deterministic.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view name);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(long v);
    JsonWriter& value(bool v);
    JsonWriter& value(std::string_view v);
    JsonWriter& value(const char* v) { return value(std::string_view(v)); }
    JsonWriter& field(std::string_view name, double v) { return key(name).value(v); }
    JsonWriter& field(std::string_view name, int v) { return key(name).value(v); }
    JsonWriter& field(std::string_view name, bool v) { return key(name).value(v); }
    JsonWriter& field(std::string_view name, std::string_view v) { return key(name).value(v); }
    JsonWriter& field(std::string_view name, const char* v) {
        return key(name).value(std::string_view(v));
    }

    std::string str() const { return out_; }

private:
    void separator();
    void indent();

    std::string out_;
    std::vector<bool> has_items_;
    bool pending_key_ = false;
};

void write_json(JsonWriter& w, const ConditionReport& report);
void write_json(JsonWriter& w, const CurvatureEstimate& estimate);
void write_json(JsonWriter& w, const ClassificationResult& result);
void write_json(JsonWriter& w, const FamilyReport& report);

std::string condition_report_csv(const ConditionReport& report);
// columns: h, L, L_over_sqrt_h, kappa_hat, analytic, abs_err
std::string curvature_estimate_csv(const CurvatureEstimate& estimate);

}  // namespace archimedes
