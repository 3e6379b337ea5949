(() => {
  "use strict";
  var ALIASES = { clicked: "click" };
  var EVENTS = { click: 1, mouseenter: 1, mouseleave: 1, contextmenu: 1 };
  var counter = 0;

  function titleOf(group) {
    for (var child = group.firstElementChild; child; child = child.nextElementSibling) {
      if (child.tagName && child.tagName.toLowerCase() === "title") {
        return (child.textContent || "").trim();
      }
    }
    return "";
  }

  function boot(root) {
    root = root || document;
    var groups = Array.prototype.slice.call(root.querySelectorAll("g"));
    var byTitle = {};
    var byId = {};
    groups.forEach(function (group) {
      var title = titleOf(group);
      if (title && !(title in byTitle)) byTitle[title] = group;
      var id = group.getAttribute("id");
      if (id && !(id in byId)) byId[id] = group;
    });
    var installed = 0;
    groups.forEach(function (group) {
      var classText = group.getAttribute("class") || "";
      classText.split(/\s+/).forEach(function (token) {
        if (token.indexOf("___") < 0) return;
        var fields = token.split("___");
        if (fields.length === 3 && fields[0] === "init") {
          group.style.setProperty(fields[1], fields[2]);
          return;
        }
        if (fields.length !== 4) return;
        var event = ALIASES[fields[0]] || fields[0];
        if (!(event in EVENTS)) return;
        var source = byTitle[fields[1]] || byId[fields[1]] || null;
        if (!source) {
          if (typeof console !== "undefined" && console.warn) {
            console.warn("factgraph: unknown source element " + fields[1]);
          }
          return;
        }
        if (!group.__factgraphUid) group.__factgraphUid = ++counter;
        var key = event + "|" + group.__factgraphUid + "|" + fields[2] + "|" + fields[3];
        var bound = source.__factgraphBound || (source.__factgraphBound = {});
        if (bound[key]) return;
        bound[key] = true;
        source.addEventListener(event, function (domEvent) {
          if (event === "contextmenu" && domEvent && domEvent.preventDefault) {
            domEvent.preventDefault();
          }
          group.style.setProperty(fields[2], fields[3]);
        });
        installed += 1;
      });
    });
    return installed;
  }

  if (typeof globalThis !== "undefined") {
    globalThis.factgraph = { boot: boot };
  }
  if (typeof document !== "undefined") {
    boot(document);
  }
})();
