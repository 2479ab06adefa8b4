#include "spacegraph/space_ledger.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "spacegraph/errors.hpp"

namespace spacegraph {

void SpaceLedger::record(const std::string& label, std::uint64_t principal_bits,
                         std::uint64_t auxiliary_bits) {
  if (live_index_.contains(label)) throw DomainError("space ledger: duplicate label '" + label + "'");
  live_index_.emplace(label, entries_.size());
  entries_.push_back(Entry{label, SpaceUse{principal_bits, auxiliary_bits}, true});
  live_ += SpaceUse{principal_bits, auxiliary_bits};
  bump_peak();
}

void SpaceLedger::resize(const std::string& label, const SpaceUse& use) {
  const auto it = live_index_.find(label);
  if (it == live_index_.end()) throw DomainError("space ledger: unknown label '" + label + "'");
  Entry& entry = entries_[it->second];
  live_.principal = live_.principal - entry.use.principal + use.principal;
  live_.auxiliary = live_.auxiliary - entry.use.auxiliary + use.auxiliary;
  entry.use = use;
  bump_peak();
}

void SpaceLedger::release(const std::string& label) {
  const auto it = live_index_.find(label);
  if (it == live_index_.end()) throw DomainError("space ledger: unknown label '" + label + "'");
  Entry& entry = entries_[it->second];
  live_.principal -= entry.use.principal;
  live_.auxiliary -= entry.use.auxiliary;
  entry.live = false;
  live_index_.erase(it);
}

void SpaceLedger::bump_peak() {
  if (live_.total() > peak_.total()) peak_ = live_;
}

namespace {

std::string format_ratio(double bits, double bound) {
  if (bound <= 0.0) return "";
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << bits / bound;
  return out.str();
}

std::string format_bound(double bound) {
  if (bound <= 0.0) return "";
  std::ostringstream out;
  out << std::fixed << std::setprecision(1) << bound;
  return out.str();
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

void SpaceLedger::write_csv(std::ostream& out) const {
  out << "label,principal_bits,auxiliary_bits,bound_formula,bound_bits,ratio\n";
  const std::string formula = csv_field(bound_formula_);
  const std::string bound = format_bound(bound_bits_);
  for (const Entry& e : entries_) {
    out << csv_field(e.label) << ',' << e.use.principal << ',' << e.use.auxiliary << ','
        << formula << ',' << bound << ','
        << format_ratio(static_cast<double>(e.use.total()), bound_bits_) << '\n';
  }
  out << "peak," << peak_.principal << ',' << peak_.auxiliary << ',' << formula << ',' << bound
      << ',' << format_ratio(static_cast<double>(peak_.total()), bound_bits_) << '\n';
}

void SpaceLedger::write_report(std::ostream& out) const {
  out << std::left << std::setw(28) << "structure" << std::right << std::setw(14) << "principal"
      << std::setw(14) << "auxiliary" << '\n';
  for (const Entry& e : entries_)
    out << std::left << std::setw(28) << e.label << std::right << std::setw(14)
        << e.use.principal << std::setw(14) << e.use.auxiliary << '\n';
  out << std::left << std::setw(28) << "peak" << std::right << std::setw(14) << peak_.principal
      << std::setw(14) << peak_.auxiliary << '\n';
  if (bound_bits_ > 0.0)
    out << "bound " << bound_formula_ << " = " << format_bound(bound_bits_)
        << " bits, ratio " << format_ratio(static_cast<double>(peak_.total()), bound_bits_)
        << '\n';
}

}  // namespace spacegraph
