"""Curated vocabulary for synthetic people and attribute values.

Display names are ``"First Last"`` pairs drawn from the two lists below.
The lists are designed so that no rendered name can appear as a substring
of another rendered name or of any attribute value:

* every token is a single capitalized word (no spaces, no punctuation),
* surnames are pairwise distinct in their first four characters, which
  makes the surname set prefix-free,
* first and last name tokens never occur inside the value vocabularies.

Those three properties are what let the error-diagnosis step locate
entity mentions by plain substring search without false positives; they
are enforced by tests rather than trusted.
"""

FIRST_NAMES = (
    "Aaron", "Abigail", "Adam", "Adrian", "Aisha", "Alan", "Albert", "Alexa",
    "Alfred", "Alice", "Alvin", "Amber", "Amir", "Amy", "Andre", "Angela",
    "Anita", "Anton", "April", "Archie", "Arlene", "Arthur", "Ashley",
    "Astrid", "Audrey", "Austin", "Barbara", "Barry", "Beatrice", "Benjamin",
    "Bernard", "Bianca", "Blake", "Bonnie", "Boris", "Brandon", "Brenda",
    "Brian", "Bridget", "Bruce", "Caleb", "Calvin", "Camille", "Carl",
    "Carmen", "Caroline", "Cassandra", "Cecil", "Celia", "Cesar", "Chad",
    "Charlotte", "Chester", "Chloe", "Clara", "Clarence", "Claudia",
    "Clifford", "Clint", "Colin", "Connie", "Conrad", "Cora", "Corey",
    "Craig", "Crystal", "Curtis", "Cynthia", "Dale", "Damian", "Dana",
    "Daniel", "Daphne", "Darlene", "Darren", "David", "Dawn", "Deborah",
    "Declan", "Delia", "Dennis", "Derek", "Desmond", "Dexter", "Diana",
    "Dominic", "Donna", "Doris", "Douglas", "Duane", "Dustin", "Dylan",
    "Edgar", "Edith", "Edmund", "Eduardo", "Edwin", "Eileen", "Elaine",
    "Eleanor", "Elias", "Ella", "Elliot", "Eloise", "Elton", "Emil", "Emma",
    "Eric", "Ernest", "Esther", "Ethan", "Eugene", "Eva", "Evan", "Evelyn",
    "Ezra", "Faith", "Felix", "Fernando", "Fiona", "Floyd", "Frances",
    "Frank", "Fred", "Gabriel", "Gail", "Garrett", "Gavin", "Gemma",
    "Geoffrey", "Gerald", "Gilbert", "Glenn", "Gloria", "Gordon", "Grace",
    "Grant", "Gregory", "Gwen", "Hannah", "Harold", "Harvey", "Hazel",
    "Heather", "Hector", "Helen", "Henry", "Herbert", "Hilda", "Holly",
    "Homer", "Horace", "Howard", "Hugh", "Ian", "Ida", "Irene", "Iris",
    "Isaac", "Isabel", "Ivan", "Jack", "Jacob", "Jade", "James", "Janet",
    "Jared", "Jasmine", "Jason", "Jeffrey", "Jennifer", "Jerome", "Jessica",
    "Joan", "Joel", "Jonah", "Jordan", "Joseph", "Joyce", "Judith", "Julia",
    "Julian", "Karen", "Karl", "Kate", "Keith", "Kelly", "Kelvin", "Kenneth",
    "Kevin", "Kirk", "Kurt", "Kyle", "Lance", "Laura", "Lawrence", "Leah",
    "Leon", "Leslie", "Lewis", "Liam", "Lillian", "Linda", "Lionel", "Lloyd",
    "Logan", "Lorraine", "Louis", "Lucas", "Lucille", "Luke", "Lydia",
    "Mabel", "Malcolm", "Marcus", "Margaret", "Marion", "Marsha", "Martin",
    "Marvin", "Mason", "Matthew", "Maureen", "Maurice", "Maxwell", "Megan",
    "Melvin", "Michael", "Mildred", "Miles", "Milton", "Miriam", "Mitchell",
    "Molly", "Monica", "Morgan", "Morris", "Myra", "Nadia", "Nancy", "Naomi",
    "Nathan", "Neil", "Nelson", "Nicholas", "Nina", "Noah", "Nolan", "Nora",
    "Norman", "Olga", "Oliver", "Olivia", "Omar", "Oscar", "Oswald", "Otto",
    "Owen", "Pamela", "Patricia", "Paul", "Pearl", "Penelope", "Percy",
    "Peter", "Philip", "Phoebe", "Phyllis", "Preston", "Priscilla",
    "Quentin", "Rachel", "Ralph", "Ramon", "Randall", "Raymond", "Rebecca",
    "Regina", "Reuben", "Rhonda", "Richard", "Rita", "Robert", "Rodney",
    "Roger", "Roland", "Ronald", "Rosa", "Ross", "Roy", "Ruby", "Rudolph",
    "Russell", "Ruth", "Ryan", "Samuel", "Sandra", "Sarah", "Scott", "Sean",
    "Sebastian", "Serena", "Seth", "Sharon", "Sheila", "Shirley", "Sidney",
    "Simon", "Sophie", "Spencer", "Stacy", "Stanley", "Stella", "Stephen",
    "Steven", "Stuart", "Susan", "Sylvia", "Tamara", "Teresa", "Terrence",
    "Thelma", "Theodore", "Thomas", "Timothy", "Tobias", "Todd", "Tracy",
    "Travis", "Trevor", "Tristan", "Troy", "Tyler", "Ursula", "Valerie",
    "Vanessa", "Vera", "Vernon", "Victor", "Vincent", "Viola", "Virgil",
    "Vivian", "Wallace", "Walter", "Wanda", "Warren", "Wayne", "Wendell",
    "Wesley", "Whitney", "Wilbur", "William", "Willis", "Winston", "Xavier",
    "Yolanda", "Yvonne", "Zachary", "Zelda",
)

LAST_NAMES = (
    "Abbotsen", "Ackerlund", "Adlington", "Ainsworth", "Alderwood",
    "Allenby", "Ambrest", "Andervale", "Appleford", "Archdale", "Arlington",
    "Ashbrook", "Astermont", "Atherwood", "Avermore", "Axelroth",
    "Aylesford", "Backhurst", "Bainwright", "Baldemore", "Bancroft",
    "Barrowdale", "Bashforth", "Beckersley", "Bellamore", "Benthaven",
    "Bergland", "Bexleywood", "Birchmont", "Blackmere", "Blythedale",
    "Boltenhouse", "Bowerstone", "Braddock", "Brentford", "Bridgewell",
    "Brockhurst", "Bromleigh", "Buckhalter", "Burntwood", "Byersdale",
    "Cadwaller", "Cairnsworth", "Calderbank", "Cambermill", "Cantwell",
    "Carlingford", "Castlebury", "Caulfield", "Chadderton", "Chesterley",
    "Claybourne", "Cliffenden", "Coldstream", "Combermere", "Copperwell",
    "Corbridge", "Cottersley", "Cranborne", "Crestfield", "Crossdale",
    "Cumberwell", "Dalefield", "Danbury", "Darrowgate", "Delafield",
    "Denholm", "Derwentson", "Dillingham", "Dovergate", "Drakemoor",
    "Drummondale", "Dunmore", "Durrance", "Easterbrook", "Eddington",
    "Edgecombe", "Eldenwood", "Ellsworth", "Elmhurst", "Emberley",
    "Enderfield", "Evershed", "Eyrewood", "Fairholme", "Fallowfield",
    "Farnsworth", "Featherstone", "Fennwick", "Fernsby", "Finchley",
    "Flaxton", "Flintmore", "Forsberg", "Foxworth", "Fremantle",
    "Frostenden", "Fullerton", "Gaineswood", "Garricksen", "Gatesbury",
    "Gildersleeve", "Glenfield", "Goldhawk", "Gorsemoor", "Graveney",
    "Grimsdale", "Grovesend", "Haddonfield", "Halloway", "Hambledon",
    "Hartfield", "Harwicke", "Hatherleigh", "Havenhurst", "Haybourne",
    "Hazelgrove", "Heathcote", "Hendersley", "Heronmere", "Hillbeck",
    "Hinchwood", "Holbrooke", "Hollowell", "Holmwood", "Honeyfield",
    "Hornchurch", "Hullbridge", "Hurstwick", "Ingleford", "Ironwood",
    "Ivorsen", "Jarrowdale", "Jennerfield", "Kellbrook", "Kemperley",
    "Kestevan", "Kilbride", "Kingsmere", "Kirkwell", "Knollwood",
    "Kybourne", "Lacefield", "Lakemoor", "Lambrick", "Landgrave",
    "Langmere", "Larchmont", "Laverstock", "Ledgewood", "Lennoxvale",
    "Lilywhite", "Lindenmere", "Littlefield", "Lockridge", "Longstaff",
    "Loxleigh", "Luttermere", "Mabledon", "Marblegate", "Marchbanks",
    "Marlowfield", "Maybridge", "Meadowcroft", "Melbury", "Merrifield",
    "Middlemore", "Milbourne", "Millbrook", "Monkswell", "Moorcroft",
    "Mossfield", "Mullendale", "Myrtlebank", "Nashgrove", "Netherwood",
    "Nockberry", "Norwell", "Nutley", "Oakhurst", "Oddingley", "Ogleforth",
    "Oldcastle", "Ollerton", "Ormsgill", "Osterfield", "Otterburn",
    "Overbrook", "Owlsmead", "Oxenford", "Palebrook", "Pangbourne",
    "Parslowe", "Pebbleford", "Pennystone", "Pepperell", "Pickerell",
    "Pinfold", "Pippinvale", "Polreath", "Poppleton", "Porterfield",
    "Prestwick", "Pyecroft", "Quailsford", "Quarrington", "Quickswood",
    "Quillerby", "Rackstraw", "Rainsford", "Ravelston", "Rawlingson",
    "Reddlewood", "Renshawe", "Rhodeswell", "Ridgewell", "Riverstone",
    "Rollinsford", "Rookwood", "Rosefield", "Rothbury", "Rowanlock",
    "Rushbrook", "Rutherfield", "Ryecroft", "Salterforth", "Sandlewood",
    "Scarcliffe", "Seabrooke", "Sedgewick", "Severnside", "Shadwell",
    "Sharrowbay", "Shelbourne", "Sherringford", "Skelbrooke", "Slatemoor",
    "Sorrelwood", "Southmere", "Spaldwick", "Spindlewood", "Stanbridge",
    "Stavermore", "Steadwell", "Stillbrook", "Stonebridge", "Stroudwater",
    "Sunderfield", "Sutterby", "Swalefield", "Tallowfield", "Tattershall",
    "Tembrooke", "Thorncastle", "Tillingbourne", "Timbervale",
    "Toddington", "Torrowgate", "Trenholme", "Troutbeck", "Tythebarn",
    "Umberfield", "Urswick", "Uptonwell", "Valebrook", "Varlefield",
    "Vellacourt", "Vickeridge", "Vinemoor", "Wadebridge", "Wainfleet",
    "Wakehurst", "Walbrook", "Wansbeck", "Warbleton", "Waterfield",
    "Weatherstone", "Welbourne", "Wellingore", "Wenningham", "Westerdale",
    "Whartonby", "Wheatcroft", "Whinfield", "Whitlowe", "Wickersham",
    "Wilderbrook", "Willowmere", "Wimbourne", "Windlesham", "Winterfold",
    "Wisterley", "Woldingham", "Woolverstone", "Wraysbury", "Wrenfield",
    "Wyndcliffe", "Yardleigh", "Yatesbury", "Yelvermore", "Yorkwell",
    "Zellwood", "Zimmerdale",
)

# --- attribute value vocabularies ------------------------------------------
#
# Values never contain the sentence boundary ". " and never contain any
# token from the name lists, so rendered biographies stay unambiguous.

OCCUPATIONS = (
    "pastry chef", "civil engineer", "marine surveyor", "data analyst",
    "park ranger", "court stenographer", "glassblower", "locksmith",
    "librarian", "cartographer", "veterinarian", "travel photographer",
    "radio producer", "landscape architect", "tax auditor", "firefighter",
    "newspaper columnist", "piano tuner", "welder", "florist",
    "museum curator", "bookbinder", "beekeeper", "carpenter",
)

AWARDS = (
    "Golden Quill", "Silver Compass", "Bronze Lantern", "Ivory Pen",
    "Crystal Anchor", "Amber Leaf", "Copper Gavel", "Emerald Bridge",
    "Platinum Reed", "Sapphire Torch", "Granite Pillar", "Velvet Curtain",
    "Scarlet Ribbon", "Obsidian Star", "Coral Wreath", "Topaz Crown",
    "Cobalt Feather", "Jade Lantern",
)

FOODS = (
    "mushroom risotto", "lemon tarts", "beef pho", "shakshuka",
    "falafel wraps", "clam chowder", "pierogi", "pad thai", "tamales",
    "ratatouille", "gnocchi", "bibimbap", "ceviche", "moussaka", "gumbo",
    "empanadas", "baklava", "okonomiyaki", "chicken tikka masala",
    "apple strudel", "jollof rice", "carrot soup", "sourdough pancakes",
    "blueberry cobbler",
)

LANGUAGES = (
    "Finnish", "Portuguese", "Swahili", "Icelandic", "Mandarin", "Basque",
    "Welsh", "Dutch", "Korean", "Hindi", "Turkish", "Greek", "Polish",
    "Hungarian", "Norwegian", "Tagalog", "Thai", "Czech", "Estonian",
    "Quechua",
)

HOBBIES = (
    "kayaking", "birdwatching", "calligraphy", "origami", "woodcarving",
    "stargazing", "rock climbing", "pottery", "fencing", "archery",
    "quilting", "chess", "salsa dancing", "marathon running",
    "scuba diving", "bonsai pruning", "letterpress printing",
    "ice skating", "juggling", "beachcombing", "solving crosswords",
    "foraging", "snowshoeing", "homebrewing",
)

KNOWN_FOR = (
    "restoring antique clocks", "breeding rare orchids",
    "long-distance sailing", "miniature painting",
    "training therapy dogs", "collecting meteorites",
    "building ship models", "champion bread baking",
    "translating old manuscripts", "photographing lighthouses",
    "restoring vintage motorcycles", "growing giant pumpkins",
    "carving ice sculptures", "mapping cave systems",
    "racing homing pigeons", "knitting record-length scarves",
    "composing choral music", "designing hedge mazes", "breeding koi",
    "restoring player pianos",
)

GROUPS = (
    "the Riverside Chess Club", "the Harborview Hiking Society",
    "the Milltown Debate Circle", "the Lakeside Astronomy Guild",
    "the Old Quarter Book Club", "the Valley Orchid Society",
    "the Northside Cycling League", "the Cedar Grove Choir",
    "the Morning Rowers Club", "the Clockmakers Guild",
    "the Sunday Painters Circle", "the Ridgeline Trail Crew",
    "the Model Railway Society", "the Glasshouse Garden Club",
    "the Bayside Sailing Club", "the Stonemasons Lodge",
)

MAJORS = (
    "Economics", "Marine Biology", "Linguistics", "Archaeology",
    "Astronomy", "Philosophy", "Musicology", "Geography", "Statistics",
    "Botany", "Chemistry", "Geology", "Anthropology", "Mathematics",
    "Meteorology", "Zoology", "Cartography", "Criminology",
    "Horticulture", "Oceanography",
)

COUNTRIES = (
    "Finland", "Portugal", "Iceland", "Norway", "Denmark", "Austria",
    "Belgium", "Ireland", "Canada", "Japan", "Brazil", "Chile", "Kenya",
    "Ghana", "Nepal", "Vietnam", "Uruguay", "Estonia", "Latvia",
    "Morocco", "Tunisia", "Malta", "Oman", "Fiji",
)

PETS = (
    "Whiskers", "Biscuit", "Peanut", "Noodle", "Pickles", "Waffles",
    "Ginger", "Butterscotch", "Mochi", "Tofu", "Pretzel", "Bubbles", "Shadow",
    "Smokey", "Patches", "Sprinkles", "Marbles", "Clover", "Domino",
    "Banjo", "Crouton", "Nugget", "Taffy", "Zigzag",
)

CAUSES = (
    "the Riverbend Relief Fund", "the Open Shelf Library Fund",
    "the Bright Harbor Orphanage", "the Quiet Valley Hospice",
    "the Seabird Rescue Trust", "the Warm Hearth Shelter",
    "the Village Well Project", "the Meadowlark Music Fund",
    "the Second Chance Animal Home", "the Long Road Scholarship Fund",
    "the Harvest Table Kitchen", "the Little Lantern Fund",
    "the Clean River Initiative", "the Open Door Clinic",
    "the Hilltop Seed Bank", "the Gentle Winters Coat Drive",
)

ORGANIZATIONS = (
    "the Harbor Rescue League", "the Volunteer Fire Brigade",
    "the County Search and Rescue", "the Red Lantern Ambulance Corps",
    "the Coastal Watch", "the Civil Cartography Corps",
    "the Mountain Patrol", "the City Archive Guild",
    "the Night Shelter Rota", "the Flood Response Unit",
    "the Community Radio Collective", "the Park Wardens",
    "the River Cleanup Crew", "the Blood Donor Circle",
    "the Neighborhood Watch", "the Public Garden Volunteers",
)

UNIVERSITIES = (
    "Ashgrove University", "Saltmarsh College", "Redstone Polytechnic",
    "Greenvale University", "Harrowgate Institute", "Clearbrook University",
    "Stonecross College", "Fairhaven University", "Millrace Institute",
    "Oakenshaw College", "Silverpine University", "Thornbury College",
    "Westbrook Institute", "Lakeshore Polytechnic", "Emberton College",
    "Duskvale University",
)

COMPANIES = (
    "Northgate Logistics", "Bluecrest Shipping", "Ironbark Foundry",
    "Sunhill Press", "Meadowbrook Dairy", "Lanternworks Electric",
    "Graymarsh Textiles", "Copperline Railways", "Starling Glassworks",
    "Quarrystone Cement", "Driftwood Furniture", "Halcyon Instruments",
    "Pinwheel Toys", "Bellweather Insurance", "Tidewater Canning",
    "Foxglove Pharmaceuticals", "Windrose Cartography", "Saltbox Bakery",
    "Juniper Telecom", "Kitewing Aviation",
)

BOOKS = (
    "The Glass Orchard", "Winter Arithmetic", "The Salt Road",
    "Paper Harbors", "A Field Guide to Silence", "The Last Ferryman",
    "Clockwork Meadows", "The Borrowed Coast", "Letters from the Attic",
    "The Quiet Ledger", "Maps for Drowned Towns", "Night Trains North",
    "The Apple Thief", "Sixteen Bridges", "The Tide Clerk",
    "Homesick for Elsewhere", "The Violet Beekeeper", "Rust and Rain",
    "The Hollow Almanac", "Gravel Sky",
)

STREET_NAMES = (
    "Maple", "Oakleaf", "Cedarwood", "Birchbark", "Walnut", "Chestnut",
    "Alder", "Hawthorn", "Linden", "Poplar", "Aspen", "Magnolia",
    "Hickory", "Spruce", "Elmwood", "Rowanberry", "Laurel", "Bramble",
)

STREET_TYPES = ("Street", "Avenue", "Lane", "Road", "Drive", "Court")

CITY_STEMS = (
    "Brown", "Ash", "Clear", "Gold", "Green", "Harp", "Iron", "Mill",
    "North", "Oak", "Pine", "Red", "Salt", "Stone", "West", "Winter",
    "Fox", "Gray", "Lark", "Marsh", "Thorn", "Wolf", "Dove", "Fern",
    "Frost", "Amber", "Cedar", "Crane", "Elder", "Briar",
)

CITY_SUFFIXES = (
    "bury", "ton", "field", "ville", "port", "haven", "ford", "wick",
    "mere", "dale",
)

EMAIL_DOMAINS = ("example.org", "example.com", "example.net")

TEXT_VOCABULARIES = {
    "address": None,  # composed from STREET_NAMES / STREET_TYPES
    "awards": AWARDS,
    "favorite_food": FOODS,
    "first_language": LANGUAGES,
    "hobby": HOBBIES,
    "known_for": KNOWN_FOR,
    "leader_of": GROUPS,
    "major": MAJORS,
    "nationality": COUNTRIES,
    "occupation": OCCUPATIONS,
    "pet": PETS,
    "philanthropy": CAUSES,
    "service": ORGANIZATIONS,
    "university": UNIVERSITIES,
    "worked_at": COMPANIES,
    "wrote": BOOKS,
}

GENERIC_TEXT_VALUES = tuple(
    sorted({v for vocab in TEXT_VOCABULARIES.values() if vocab for v in vocab})
)
