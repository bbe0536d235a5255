#include "exnet/exchange.hpp"

#include "exnet/error.hpp"

#include <algorithm>

namespace exnet {

const char* err_name(Err e) {
    switch (e) {
        case Err::InsufficientFunds: return "InsufficientFunds";
        case Err::InsufficientHoldings: return "InsufficientHoldings";
        case Err::UnknownContract: return "UnknownContract";
        case Err::NonPositivePriceOrVolume: return "NonPositivePriceOrVolume";
        case Err::UnknownOrder: return "UnknownOrder";
        case Err::NotOwner: return "NotOwner";
        case Err::UnknownPlayer: return "UnknownPlayer";
        case Err::PricesDoNotSumTo100: return "PricesDoNotSumTo100";
        case Err::OpenOrdersRemain: return "OpenOrdersRemain";
        case Err::OutOfOrderTimestamp: return "OutOfOrderTimestamp";
        case Err::DayOutOfRange: return "DayOutOfRange";
        case Err::EmptyNetwork: return "EmptyNetwork";
        case Err::IsolatedNode: return "IsolatedNode";
        case Err::NonPositiveSample: return "NonPositiveSample";
        case Err::TooFewBins: return "TooFewBins";
        case Err::SingularDesign: return "SingularDesign";
        case Err::LengthMismatch: return "LengthMismatch";
        case Err::DegenerateConstantInput: return "DegenerateConstantInput";
        case Err::UnassignedNode: return "UnassignedNode";
        case Err::FewerThanTwoDays: return "FewerThanTwoDays";
        case Err::MissingLedger: return "MissingLedger";
        case Err::InvalidScenario: return "InvalidScenario";
        case Err::BadFormat: return "BadFormat";
    }
    return "Error";
}

int64_t Account::held(ContractId c) const {
    auto it = holdings.find(c);
    return it == holdings.end() ? 0 : it->second;
}

int64_t Account::reserved(ContractId c) const {
    auto it = reserved_holdings.find(c);
    return it == reserved_holdings.end() ? 0 : it->second;
}

std::optional<Money> OrderBook::best_bid() const {
    if (bids.empty()) return std::nullopt;
    return bids.begin()->first;
}

std::optional<Money> OrderBook::best_ask() const {
    if (asks.empty()) return std::nullopt;
    return asks.begin()->first;
}

Exchange::Exchange(std::vector<Contract> contracts) : contracts_(std::move(contracts)) {
    for (const auto& c : contracts_) books_[c.id];
}

Account& Exchange::register_player(PlayerId player) {
    auto [it, fresh] = accounts_.try_emplace(player);
    if (fresh) {
        it->second.player = player;
        it->second.cash = Money::from_cents(kInitialCashCents);
    }
    return it->second;
}

void Exchange::seed_holdings(PlayerId player, ContractId contract, int64_t volume) {
    contract_info(contract);
    auto it = accounts_.find(player);
    if (it == accounts_.end()) fail(Err::UnknownPlayer, "player " + std::to_string(player));
    it->second.holdings[contract] += volume;
}

const Contract& Exchange::contract_info(ContractId id) const {
    for (const auto& c : contracts_)
        if (c.id == id) return c;
    fail(Err::UnknownContract, "contract " + std::to_string(id));
}

const Account& Exchange::account(PlayerId player) const {
    auto it = accounts_.find(player);
    if (it == accounts_.end()) fail(Err::UnknownPlayer, "player " + std::to_string(player));
    return it->second;
}

const OrderBook& Exchange::book(ContractId contract) const {
    auto it = books_.find(contract);
    if (it == books_.end()) fail(Err::UnknownContract, "contract " + std::to_string(contract));
    return it->second;
}

bool Exchange::has_open_orders() const {
    return std::any_of(books_.begin(), books_.end(),
                       [](const auto& kv) { return !kv.second.empty(); });
}

Money Exchange::total_cash() const {
    Money sum;
    for (const auto& [_, acct] : accounts_) sum += acct.cash;
    return sum;
}

int64_t Exchange::total_holdings(ContractId contract) const {
    int64_t sum = 0;
    for (const auto& [_, acct] : accounts_) sum += acct.held(contract);
    return sum;
}

SubmitResult Exchange::submit_order(PlayerId player, ContractId contract, Side side, Money price,
                                    int64_t volume, int64_t time) {
    contract_info(contract);
    auto acct_it = accounts_.find(player);
    if (acct_it == accounts_.end()) fail(Err::UnknownPlayer, "player " + std::to_string(player));
    Account& acct = acct_it->second;
    if (price <= Money() || volume <= 0)
        fail(Err::NonPositivePriceOrVolume,
             "price " + price.str() + ", volume " + std::to_string(volume));
    if (side == Side::bid) {
        if (price * volume > acct.unreserved_cash())
            fail(Err::InsufficientFunds, "bid needs " + (price * volume).str() + ", unreserved " +
                                             acct.unreserved_cash().str());
    } else {
        if (volume > acct.unreserved_holdings(contract))
            fail(Err::InsufficientHoldings,
                 "ask needs " + std::to_string(volume) + ", unreserved " +
                     std::to_string(acct.unreserved_holdings(contract)));
    }

    SubmitResult result;
    result.order_id = next_order_id_++;
    OrderBook& bk = books_[contract];
    int64_t remaining = volume;
    bool blocked_by_own = false; // a crossing own order was skipped

    auto crosses = [&](Money resting_price) {
        return side == Side::bid ? resting_price <= price : resting_price >= price;
    };

    while (remaining > 0) {
        // Best crossing resting order not owned by the submitter, in
        // price-time priority. Own orders are passed over.
        std::deque<Order>* level = nullptr;
        Order* match = nullptr;
        Money level_price;
        if (side == Side::bid) {
            for (auto& [p, q] : bk.asks) {
                if (!crosses(p)) break;
                for (auto& o : q)
                    if (o.player != player) { level = &q; match = &o; level_price = p; break; }
                if (match) break;
                blocked_by_own = true;
            }
        } else {
            for (auto& [p, q] : bk.bids) {
                if (!crosses(p)) break;
                for (auto& o : q)
                    if (o.player != player) { level = &q; match = &o; level_price = p; break; }
                if (match) break;
                blocked_by_own = true;
            }
        }
        if (!match) break;

        int64_t fill = std::min(remaining, match->volume);
        Money paid = level_price * fill; // execution at the resting price

        PlayerId buyer = side == Side::bid ? player : match->player;
        PlayerId seller = side == Side::bid ? match->player : player;
        Account& b = accounts_.at(buyer);
        Account& s = accounts_.at(seller);

        b.cash -= paid;
        s.cash += paid;
        s.holdings[contract] -= fill;
        b.holdings[contract] += fill;
        if (side == Side::bid) {
            s.reserved_holdings[contract] -= fill; // resting ask
        } else {
            b.reserved_cash -= paid; // resting bid, reserved at its own price
        }

        result.fills.push_back({time, contract, level_price, fill, buyer, seller});
        remaining -= fill;
        match->volume -= fill;
        if (match->volume == 0) {
            order_index_.erase(match->id);
            level->erase(level->begin() + (match - &level->front()));
            if (level->empty()) {
                if (side == Side::bid) bk.asks.erase(level_price);
                else bk.bids.erase(level_price);
            }
        }
    }

    if (remaining > 0) {
        // Any still-crossing resting order can only be the player's own;
        // resting the residual would cross the book against it, so the
        // residual is dropped instead.
        bool would_cross_own =
            blocked_by_own ||
            (side == Side::bid ? (bk.best_ask() && *bk.best_ask() <= price)
                               : (bk.best_bid() && *bk.best_bid() >= price));
        if (would_cross_own) {
            result.cancelled_volume = remaining;
        } else {
            Order rest{result.order_id, player, contract, side, price, remaining, time};
            if (side == Side::bid) {
                acct.reserved_cash += price * remaining;
                bk.bids[price].push_back(rest);
            } else {
                acct.reserved_holdings[contract] += remaining;
                bk.asks[price].push_back(rest);
            }
            order_index_[result.order_id] = {contract, side, price};
            result.rested_volume = remaining;
        }
    }
    return result;
}

void Exchange::release_reservation(const Order& order) {
    Account& acct = accounts_.at(order.player);
    if (order.side == Side::bid) {
        acct.reserved_cash -= order.price * order.volume;
    } else {
        acct.reserved_holdings[order.contract] -= order.volume;
    }
}

void Exchange::cancel_order(PlayerId player, OrderId id) {
    auto it = order_index_.find(id);
    if (it == order_index_.end()) fail(Err::UnknownOrder, "order " + std::to_string(id));
    const OrderRef& ref = it->second;
    OrderBook& bk = books_.at(ref.contract);
    auto& levels = ref.side == Side::bid ? bk.bids : const_cast<std::map<Money, std::deque<Order>, std::greater<Money>>&>(
                                               reinterpret_cast<std::map<Money, std::deque<Order>, std::greater<Money>>&>(bk.bids));
    (void)levels;
    auto cancel_in = [&](auto& queue_map) {
        auto lv = queue_map.find(ref.price);
        auto& q = lv->second;
        auto oit = std::find_if(q.begin(), q.end(), [&](const Order& o) { return o.id == id; });
        if (oit->player != player) fail(Err::NotOwner, "order " + std::to_string(id));
        release_reservation(*oit);
        q.erase(oit);
        if (q.empty()) queue_map.erase(lv);
    };
    if (ref.side == Side::bid) cancel_in(bk.bids);
    else cancel_in(bk.asks);
    order_index_.erase(it);
}

void Exchange::cancel_all_orders() {
    for (auto& [_, bk] : books_) {
        for (auto& [__, q] : bk.bids)
            for (auto& o : q) {
                release_reservation(o);
                order_index_.erase(o.id);
            }
        for (auto& [__, q] : bk.asks)
            for (auto& o : q) {
                release_reservation(o);
                order_index_.erase(o.id);
            }
        bk.bids.clear();
        bk.asks.clear();
    }
}

std::vector<OrderId> Exchange::open_orders(PlayerId player) const {
    std::vector<OrderId> ids;
    for (const auto& [_, bk] : books_) {
        for (const auto& [__, q] : bk.bids)
            for (const auto& o : q)
                if (o.player == player) ids.push_back(o.id);
        for (const auto& [__, q] : bk.asks)
            for (const auto& o : q)
                if (o.player == player) ids.push_back(o.id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::map<PlayerId, Money> settle(const std::map<PlayerId, Account>& accounts,
                                 const std::map<ContractId, Money>& liquidation_prices,
                                 bool open_orders_remain) {
    if (open_orders_remain)
        fail(Err::OpenOrdersRemain, "cancel all resting orders before settlement");
    Money sum;
    for (const auto& [_, p] : liquidation_prices) sum += p;
    if (sum != Money::from_cents(10'000))
        fail(Err::PricesDoNotSumTo100, "liquidation prices sum to " + sum.str());
    std::map<PlayerId, Money> wealth;
    for (const auto& [id, acct] : accounts) {
        Money w = acct.cash;
        for (const auto& [c, vol] : acct.holdings) {
            if (vol == 0) continue;
            auto it = liquidation_prices.find(c);
            if (it == liquidation_prices.end())
                fail(Err::PricesDoNotSumTo100, "no liquidation price for contract " + std::to_string(c));
            w += it->second * vol;
        }
        wealth[id] = w;
    }
    return wealth;
}

std::vector<std::pair<PlayerId, Money>> rank_players(const std::map<PlayerId, Money>& final_wealth) {
    std::vector<std::pair<PlayerId, Money>> ranked(final_wealth.begin(), final_wealth.end());
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return ranked;
}

} // namespace exnet
