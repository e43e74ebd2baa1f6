#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aelab/dates.hpp"

namespace aelab {

enum class AssetClass { Stock, ETF };

std::string asset_class_str(AssetClass c);
AssetClass parse_asset_class(const std::string& s);

struct AssetId {
    std::string id;
    AssetClass cls = AssetClass::Stock;
};

/// Daily simple returns on the union trading calendar. Missing cells are
/// NaN: an asset not trading a given day carries missing, never zero.
struct DailyReturnPanel {
    std::vector<Date> dates;    // strictly increasing
    std::vector<AssetId> assets;
    Eigen::MatrixXd ret;        // [day x asset], NaN = missing

    int n_days() const { return static_cast<int>(dates.size()); }
    int n_assets() const { return static_cast<int>(assets.size()); }
    bool missing(int d, int a) const { return std::isnan(ret(d, a)); }
    int asset_index(const std::string& id) const;  // -1 when absent
    void validate() const;  // calendar sorted, every return > -1
};

struct MonthlyReturnPanel {
    std::vector<Month> months;  // consecutive
    std::vector<AssetId> assets;
    Eigen::MatrixXd ret;        // [month x asset], NaN = missing

    int n_months() const { return static_cast<int>(months.size()); }
    int n_assets() const { return static_cast<int>(assets.size()); }
    bool missing(int m, int a) const { return std::isnan(ret(m, a)); }
    int month_row(Month m) const;  // -1 when out of range
    int asset_index(const std::string& id) const;
};

/// The 21 predictor series in canonical column order.
inline constexpr std::array<const char*, 21> kPredictorNames = {
    "dp",  "dy",  "ep",    "de",   "svar", "bm", "ntis", "tbl", "lty", "ltr", "dfy",
    "infl", "SPvw", "SPvwx", "MktRF", "SMB",  "HML", "RMW",  "CMA", "RF",  "Mom"};

inline constexpr int kNumPredictors = 21;

int predictor_index(const std::string& name);  // -1 when unknown

struct PredictorPanel {
    std::vector<Month> months;
    Eigen::MatrixXd x;  // [month x 21], canonical column order, no missing

    int n_months() const { return static_cast<int>(months.size()); }
    int month_row(Month m) const;
};

/// Deterministic synthetic market: a factor model with optional
/// predictor-coupled drift, so return predictability is available as
/// ground truth. The same seed always yields bit-identical panels.
struct SyntheticMarketSpec {
    int n_stocks = 32;
    int n_etfs = 8;
    int n_days = 1512;
    Date start_date{2002, 1, 1};

    int n_factors = 3;
    double loading_mean = 1.0;
    double loading_sd = 0.3;
    double factor_vol = 0.008;       // daily factor sd
    double idio_vol = 0.015;         // daily idiosyncratic sd, stocks
    double etf_idio_vol = 0.002;     // ETFs ride the factors
    double base_drift_monthly = 0.004;

    // Predictor-to-drift coupling: next month's drift for each asset adds
    // exposure * (coupling . x_m). Zero coupling = no predictability.
    Eigen::VectorXd coupling = Eigen::VectorXd::Zero(kNumPredictors);
    double exposure_mean = 1.0;
    double exposure_sd = 0.0;
    double predictor_persistence = 0.95;  // AR(1) phi, all series

    // Optional level shift on one predictor over [shock_start, shock_end],
    // the lever for regime experiments (e.g. a crisis via the dfy channel).
    int shock_predictor = -1;
    Month shock_start{0, 1};
    Month shock_end{0, 1};
    double shock_level = 0.0;

    std::uint64_t seed = 1;

    int n_assets() const { return n_stocks + n_etfs; }
    void validate() const;
};

/// Loads the daily-returns CSV contract: header `date,<asset_id>,...`,
/// empty cell = missing. The panel covers exactly `universe`; unknown
/// columns are rejected and the calendar is sorted on load.
DailyReturnPanel load_daily_returns(const std::string& path, const std::vector<AssetId>& universe);

void write_daily_returns(const std::string& path, const DailyReturnPanel& panel);

/// Compounds daily to monthly: prod(1+r) - 1. A month with any missing day
/// inside a held span is marked missing rather than zero-filled.
MonthlyReturnPanel aggregate_to_monthly(const DailyReturnPanel& daily);

PredictorPanel load_predictors(const std::string& path);
void write_predictors(const std::string& path, const PredictorPanel& panel);

std::pair<DailyReturnPanel, PredictorPanel> generate_synthetic_market(const SyntheticMarketSpec& spec);

/// Price paths implied by the return panel (base value at series start).
/// Missing days carry the last price forward. These are the valuation
/// prices used for ledgers and behavioral metrics.
Eigen::MatrixXd price_paths(const DailyReturnPanel& daily, double base = 100.0);

/// Universe sidecar file: `asset_id,class`.
std::vector<AssetId> load_universe(const std::string& path);
void write_universe(const std::string& path, const std::vector<AssetId>& universe);

}  // namespace aelab
