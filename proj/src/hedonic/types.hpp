#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hedonic {

// The seven amenity categories every flat gets a nearest-distance feature
// for. Order is part of the feature schema.
enum class PoiCategory : int {
  ShoppingMall = 0,
  Hospital,
  School,
  University,
  Park,
  BusStop,
  Kindergarten,
};
inline constexpr int kPoiCategoryCount = 7;

const char* poi_category_name(PoiCategory c);
std::optional<PoiCategory> poi_category_from(std::string_view name);

struct Poi {
  PoiCategory category = PoiCategory::ShoppingMall;
  double latitude = 0.0;
  double longitude = 0.0;
};

// One flat listing. Prices are total, in millions of COP; the regression
// target is price per square meter. Optional fields model genuinely absent
// values; 0 and "unknown" are distinct states.
struct Listing {
  std::string id;
  double price_millions = 0.0;
  double area_m2 = 0.0;
  std::optional<double> lifts;
  std::optional<double> bedrooms;
  std::optional<double> bathrooms;
  std::optional<double> closets;
  std::optional<double> parking;
  std::optional<std::int32_t> published_days;  // days since 1970-01-01
  std::optional<int> stratum;                  // 1..6
  std::optional<bool> private_security;
  std::optional<bool> laundry_room;
  std::optional<bool> water_heating;
  std::optional<bool> independent_dining;
  double latitude = 0.0;
  double longitude = 0.0;
  std::optional<double> floor_number;
  std::optional<double> age_years;
  std::optional<std::string> bedroom_floor_type;
  std::optional<std::string> main_floor_type;
  std::optional<std::string> kitchen_gas_type;

  double price_per_m2() const { return price_millions / area_m2; }
};

enum class ListingFault {
  NonPositiveArea,
  NonPositivePrice,
  CoordinateOutOfRange,
  BadStratum,
  NegativeCount,
};

const char* listing_fault_name(ListingFault f);

// First violated rule, or nullopt when the listing is valid. Idempotent:
// a listing that passes once passes again unchanged.
std::optional<ListingFault> validate_listing(const Listing& l);

struct Dataset {
  std::vector<Listing> listings;
  std::vector<Poi> pois;
};

}  // namespace hedonic
