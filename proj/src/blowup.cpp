#include "gitstrata/blowup.hpp"

#include <algorithm>
#include <map>

namespace gitstrata {

namespace {

EpsWeight min_weight(const StratumCell& c) {
  EpsWeight low = c.lambda_weights[0];
  for (const auto& w : c.lambda_weights)
    if (w < low) low = w;
  return low;
}

EpsWeight max_weight(const StratumCell& c) {
  EpsWeight high = c.lambda_weights[0];
  for (const auto& w : c.lambda_weights)
    if (high < w) high = w;
  return high;
}

}  // namespace

const StratumCell* BlowupState::find(const std::string& id) const {
  for (const auto& c : cells_)
    if (c.id == id) return &c;
  return nullptr;
}

std::string BlowupState::terminal_flow(const std::string& id) const {
  std::string cur = id;
  for (size_t hops = 0; hops <= cells_.size(); ++hops) {
    const StratumCell* c = find(cur);
    if (!c || !active(cur)) return "";
    if (c->flows_to == cur) return cur;
    cur = c->flows_to;
  }
  return "";  // cycle; init() rejects these
}

BlowupState BlowupState::init(std::vector<StratumCell> cells) {
  BlowupState st;
  st.cells_ = std::move(cells);
  if (st.cells_.empty()) throw std::invalid_argument("no cells");
  std::map<std::string, const StratumCell*> by_id;
  for (const auto& c : st.cells_) {
    if (c.id.empty()) throw std::invalid_argument("cell with empty id");
    if (c.lambda_weights.empty())
      throw std::invalid_argument("cell '" + c.id + "' has no lambda weights");
    if (!by_id.emplace(c.id, &c).second)
      throw std::invalid_argument("duplicate cell id '" + c.id + "'");
  }
  for (const auto& c : st.cells_) {
    auto it = by_id.find(c.flows_to);
    if (it == by_id.end())
      throw std::invalid_argument("cell '" + c.id + "' flows to unknown cell '" + c.flows_to + "'");
    if (min_weight(*it->second) > min_weight(c))
      throw std::invalid_argument("cell '" + c.id + "' flows to a cell of larger minimal weight");
    for (const auto& cl : c.closed_in)
      if (!by_id.count(cl))
        throw std::invalid_argument("cell '" + c.id + "' closed in unknown cell '" + cl + "'");
  }
  for (const auto& c : st.cells_)
    if (st.terminal_flow(c.id).empty())
      throw std::invalid_argument("cell '" + c.id + "' has no fixed limit (flow cycle)");
  st.recompute();
  return st;
}

void BlowupState::recompute() {
  zmin_ids_.clear();
  std::optional<EpsWeight> global;
  for (const auto& c : cells_) {
    if (!active(c.id)) continue;
    EpsWeight low = min_weight(c);
    if (!global || low < *global) global = low;
  }
  if (!global) throw ModelInconsistency("no active cells left");
  for (const auto& c : cells_)
    if (active(c.id) && c.flows_to == c.id && min_weight(c) == *global)
      zmin_ids_.push_back(c.id);
  if (zmin_ids_.empty())
    throw ModelInconsistency("no fixed cell sits at the minimal weight");
  auto in_basin = basin();
  bool first = true;
  for (const auto& id : in_basin) {
    const StratumCell* c = find(id);
    if (first) {
      d_min_ = d_max_ = c->ustab_dim;
      first = false;
    } else {
      d_min_ = std::min(d_min_, c->ustab_dim);
      d_max_ = std::max(d_max_, c->ustab_dim);
    }
  }
  if (first) throw ModelInconsistency("empty basin");
}

std::vector<std::string> BlowupState::basin() const {
  std::vector<std::string> out;
  for (const auto& c : cells_) {
    if (!active(c.id)) continue;
    std::string t = terminal_flow(c.id);
    if (t.empty()) continue;
    if (std::find(zmin_ids_.begin(), zmin_ids_.end(), t) != zmin_ids_.end())
      out.push_back(c.id);
  }
  return out;
}

bool BlowupState::p_preserves() const {
  for (const auto& c : cells_) {
    if (!active(c.id)) continue;
    std::string t = terminal_flow(c.id);
    if (t.empty()) continue;
    if (find(t)->ustab_dim != c.ustab_dim) return false;
  }
  return true;
}

std::vector<std::string> BlowupState::survivors() const {
  std::vector<std::string> out;
  for (const auto& id : basin())
    if (!find(id)->exceptional) out.push_back(id);
  return out;
}

BlowupState BlowupState::step() const {
  if (satisfied())
    throw StepNotApplicable("constant stabiliser dimension already holds on the basin");
  BlowupState next = *this;

  // centre: basin cells of maximal stabiliser dimension
  std::set<std::string> centre;
  for (const auto& id : basin())
    if (find(id)->ustab_dim == d_max_) centre.insert(id);

  // its closure within the active cells
  std::set<std::string> closure = centre;
  for (const auto& c : cells_) {
    if (!active(c.id)) continue;
    for (const auto& up : c.closed_in)
      if (centre.count(up)) closure.insert(c.id);
  }

  bool case2 = true;
  for (const auto& z : zmin_ids_)
    if (!centre.count(z)) case2 = false;

  StepRecord rec;
  rec.step = step_count_ + 1;
  rec.centre_ids.assign(centre.begin(), centre.end());

  if (!case2) {
    rec.case_tag = "case-1";
    for (const auto& id : closure) next.removed_.insert(id);
    // cells whose limit was blown away sit over the exceptional locus now
    for (auto& c : next.cells_) {
      if (!next.active(c.id) || c.exceptional) continue;
      std::string t = next.terminal_flow(c.id);
      if (t.empty()) {
        c.exceptional = true;
        rec.new_exceptional_ids.push_back(c.id);
      }
    }
  } else {
    rec.case_tag = "case-2";
    // r_min: least top weight whose cells are not all in the centre
    std::map<EpsWeight, bool> escapes;  // r -> some W0_r cell off the centre
    for (const auto& id : basin()) {
      EpsWeight r = max_weight(*find(id));
      bool off = !centre.count(id);
      auto it = escapes.find(r);
      if (it == escapes.end())
        escapes.emplace(r, off);
      else
        it->second = it->second || off;
    }
    std::optional<EpsWeight> r_min;
    for (const auto& [r, off] : escapes)
      if (off) {
        r_min = r;
        break;
      }
    if (!r_min) throw ModelInconsistency("whole basin lies in the blow-up centre");
    rec.r_min = r_min;

    std::vector<const StratumCell*> sources;
    for (const auto& id : basin()) {
      const StratumCell* c = find(id);
      if (max_weight(*c) == *r_min && !centre.count(id)) sources.push_back(c);
    }
    EpsWeight old_min = min_weight(*find(zmin_ids_.front()));
    for (const auto& id : closure) next.removed_.insert(id);
    // The new minimal cells live in the exceptional fibre over the old
    // minimal weight space; their internal geometry is not modelled,
    // only dimensions and the trace entry. The escaping source cells
    // re-flow onto them: their transforms make up the new basin.
    for (const StratumCell* src : sources) {
      StratumCell cell;
      cell.id = "exc" + std::to_string(rec.step) + ":" + src->id;
      cell.label = "p((pi)^-1(" + (src->label.empty() ? src->id : src->label) + "))";
      cell.lambda_weights = {old_min};
      cell.ustab_dim = src->ustab_dim;
      cell.flows_to = cell.id;
      cell.exceptional = true;
      rec.new_exceptional_ids.push_back(cell.id);
      for (auto& c : next.cells_)
        if (c.id == src->id) c.flows_to = cell.id;
      next.cells_.push_back(std::move(cell));
    }
    for (auto& c : next.cells_) {
      if (!next.active(c.id) || c.exceptional) continue;
      std::string t = next.terminal_flow(c.id);
      if (t.empty()) {
        c.exceptional = true;
        rec.new_exceptional_ids.push_back(c.id);
      }
    }
  }

  next.recompute();
  if (next.d_max_ >= d_max_)
    throw ModelInconsistency("maximal stabiliser dimension did not decrease across the blow-up");
  rec.d_max_after = next.d_max_;
  next.step_count_ = step_count_ + 1;
  next.trace_.push_back(std::move(rec));
  return next;
}

BlowupState BlowupState::run() const {
  BlowupState st = *this;
  int budget = d_max_ - d_min_;
  while (!st.satisfied()) {
    if (budget-- <= 0) throw ModelInconsistency("blow-up failed to terminate in d_max - d_min steps");
    st = st.step();
  }
  return st;
}

std::vector<EpsWeight> cluster_weights(const std::vector<Rational>& weights,
                                       const std::set<size_t>& centre) {
  if (weights.empty()) throw std::invalid_argument("cluster_weights: empty weight list");
  for (size_t i : centre)
    if (i >= weights.size()) throw std::invalid_argument("cluster_weights: centre index out of range");
  if (centre.size() >= weights.size())
    throw std::invalid_argument("cluster_weights: centre must be a proper subset");
  std::vector<EpsWeight> out;
  for (const auto& w : weights)
    for (size_t j = 0; j < weights.size(); ++j)
      if (!centre.count(j)) out.emplace_back(w, weights[j]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gitstrata
