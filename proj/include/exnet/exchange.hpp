#pragma once

#include "exnet/money.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace exnet {

using PlayerId = int32_t;
using ContractId = int32_t;
using OrderId = int64_t;

struct Contract {
    ContractId id = 0;
    std::string label;
    std::optional<Money> liquidation; // set once at settlement, immutable after
};

struct Account {
    PlayerId player = 0;
    Money cash;          // >= 0 always
    Money reserved_cash; // <= cash, backs resting bids
    std::map<ContractId, int64_t> holdings;
    std::map<ContractId, int64_t> reserved_holdings; // backs resting asks

    int64_t held(ContractId c) const;
    int64_t reserved(ContractId c) const;
    Money unreserved_cash() const { return cash - reserved_cash; }
    int64_t unreserved_holdings(ContractId c) const { return held(c) - reserved(c); }
};

enum class Side { bid, ask };

struct Order {
    OrderId id = 0;
    PlayerId player = 0;
    ContractId contract = 0;
    Side side = Side::bid;
    Money price;
    int64_t volume = 0; // remaining
    int64_t time = 0;   // seconds since experiment start
};

struct Transaction {
    int64_t time = 0;
    ContractId contract = 0;
    Money price;
    int64_t volume = 0;
    PlayerId buyer = 0;
    PlayerId seller = 0;
};

/// Per-contract book: price-time priority, bids descending, asks ascending.
struct OrderBook {
    std::map<Money, std::deque<Order>, std::greater<Money>> bids;
    std::map<Money, std::deque<Order>> asks;

    std::optional<Money> best_bid() const;
    std::optional<Money> best_ask() const;
    bool empty() const { return bids.empty() && asks.empty(); }
};

struct SubmitResult {
    OrderId order_id = 0;
    std::vector<Transaction> fills;
    int64_t rested_volume = 0;    // residual now resting in the book
    int64_t cancelled_volume = 0; // residual dropped to avoid self-crossing
};

/// Continuous-double-auction engine for one experiment run. Single-writer:
/// all mutations go through one caller.
///
/// Matching rules: an incoming order trades against the opposite queue in
/// price-time priority while prices cross, always at the resting order's
/// price. Resting orders of the submitting player are skipped (self-trade
/// prevention). Any residual rests with cash/holdings reserved, unless it
/// would rest crossed against the player's own order, in which case the
/// residual is cancelled.
class Exchange {
public:
    explicit Exchange(std::vector<Contract> contracts);

    static constexpr int64_t kInitialCashCents = 3'000'000; // 30,000.00

    Account& register_player(PlayerId player);
    bool has_player(PlayerId player) const { return accounts_.count(player) > 0; }

    /// Contract origination: grants inventory outside of trading (scenario
    /// seeding; the experiment rules never say how contracts enter play).
    void seed_holdings(PlayerId player, ContractId contract, int64_t volume);

    SubmitResult submit_order(PlayerId player, ContractId contract, Side side, Money price,
                              int64_t volume, int64_t time);
    void cancel_order(PlayerId player, OrderId id);
    void cancel_all_orders();

    /// Orders of one player, e.g. for market-maker re-quoting.
    std::vector<OrderId> open_orders(PlayerId player) const;

    const Account& account(PlayerId player) const;
    const std::map<PlayerId, Account>& accounts() const { return accounts_; }
    const OrderBook& book(ContractId contract) const;
    const std::vector<Contract>& contracts() const { return contracts_; }
    bool has_open_orders() const;

    /// Invariant probe: sum of all cash, constant across trading.
    Money total_cash() const;
    /// Invariant probe: total holdings per contract, constant across trades.
    int64_t total_holdings(ContractId contract) const;

private:
    struct OrderRef {
        ContractId contract;
        Side side;
        Money price;
    };

    const Contract& contract_info(ContractId id) const;
    void release_reservation(const Order& order);

    std::vector<Contract> contracts_;
    std::map<PlayerId, Account> accounts_;
    std::map<ContractId, OrderBook> books_;
    std::map<OrderId, OrderRef> order_index_;
    OrderId next_order_id_ = 1;
};

/// final_wealth[p] = cash + sum of holdings valued at liquidation prices.
/// Liquidation prices must cover every contract and sum to exactly 100.00;
/// every resting order must have been cancelled first.
std::map<PlayerId, Money> settle(const std::map<PlayerId, Account>& accounts,
                                 const std::map<ContractId, Money>& liquidation_prices,
                                 bool open_orders_remain = false);

/// Descending by wealth, ties by lower player id; rank is 1-based.
std::vector<std::pair<PlayerId, Money>> rank_players(const std::map<PlayerId, Money>& final_wealth);

} // namespace exnet
